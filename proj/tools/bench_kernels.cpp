// Compares the serial reference implementations of the data-parallel kernels
// against the OpenMP versions and checks that the outputs are identical.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "invariants/field_generators.hpp"
#include "invariants/group_spec.hpp"
#include "invariants/spanning.hpp"

using namespace invariants;

namespace {

GroupData cyclic_regular(unsigned n, unsigned field_order) {
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  RingCtxPtr ring = make_ring(vars);
  Matrix<Cyclotomic> shift(n, n, Cyclotomic(0));
  for (unsigned j = 0; j < n; ++j) shift.at((j + 1) % n, j) = Cyclotomic(1);
  GroupData gd;
  gd.group = enumerate_group({shift}, ring, field_order);
  for (unsigned k = 0; k < n; ++k) {
    Matrix<Cyclotomic> chi(1, 1, Cyclotomic::zeta(field_order, k));
    gd.models.push_back(extend_model(gd.group, "chi" + std::to_string(k), {chi}));
  }
  return gd;
}

GroupData a4perm() {
  RingCtxPtr ring = make_ring({"x1", "x2", "x3", "x4"});
  auto mk = [](std::initializer_list<std::initializer_list<int>> rows) {
    Matrix<Cyclotomic> m(4, 4, Cyclotomic(0));
    size_t i = 0;
    for (auto& r : rows) {
      size_t j = 0;
      for (int v : r) m.at(i, j++) = Cyclotomic(v);
      ++i;
    }
    return m;
  };
  auto sigma = mk({{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  auto tau = mk({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  GroupData gd;
  gd.group = enumerate_group({sigma, tau}, ring, 3);
  return gd;
}

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool identical) {
  std::cout << std::left << std::setw(44) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial << " ms" << std::setw(10)
            << parallel << " ms" << std::setw(8) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << "x   "
            << (identical ? "identical" : "MISMATCH") << "\n";
}

}  // namespace

int main() {
  std::cout << "kernel benchmark, " << par::max_threads() << " thread(s) available\n\n";
  std::cout << std::left << std::setw(44) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "parallel" << std::setw(9) << "speedup"
            << "   outputs\n";

  {
    GroupData c6 = cyclic_regular(6, 6);
    std::vector<Poly> batch;
    for (int d = 0; d <= 3; ++d)
      for (const auto& m : monomials_of_degree(c6.group.xring, d))
        batch.push_back(Poly::term(c6.group.xring, m, Cyclotomic(1)));
    std::vector<Poly> rs, rp;
    double ts = time_ms([&] { rs = reynolds_batch(c6.group, batch, par::Mode::serial); });
    double tp = time_ms([&] { rp = reynolds_batch(c6.group, batch, par::Mode::parallel); });
    row("reynolds batch (C6 regular, deg <= 3)", ts, tp, rs == rp);
  }
  {
    GroupData a4 = a4perm();
    DegreeAction ds, dp;
    double ts = time_ms([&] { ds = degree_action(a4.group, 4, par::Mode::serial); });
    double tp = time_ms([&] { dp = degree_action(a4.group, 4, par::Mode::parallel); });
    row("degree-4 action matrices (A4)", ts, tp, ds.mats == dp.mats);
  }
  {
    GroupData a4 = a4perm();
    std::vector<Poly> polys;
    for (const auto& m : monomials_of_degree(a4.group.xring, 2))
      polys.push_back(Poly::term(a4.group.xring, m, Cyclotomic(1)));
    polys.resize(8, Poly(a4.group.xring));
    Matrix<Poly> ms(1, 1, Poly(a4.group.xring)), mp = ms;
    double ts = time_ms([&] { ms = translate_matrix(a4.group, polys, par::Mode::serial); });
    double tp = time_ms([&] { mp = translate_matrix(a4.group, polys, par::Mode::parallel); });
    row("translate matrix (A4, 8 quadrics)", ts, tp, ms == mp);
    size_t rs = 0, rp = 0;
    double bs = time_ms([&] { rs = bareiss_rank(ms, par::Mode::serial); });
    double bp = time_ms([&] { rp = bareiss_rank(ms, par::Mode::parallel); });
    row("fraction-free rank of the 12x8 above", bs, bp, rs == rp);
  }
  {
    GroupData c6 = cyclic_regular(6, 6);
    std::vector<Poly> is, ip;
    double ts = time_ms([&] { is = invariant_basis(c6, 3, par::Mode::serial); });
    double tp = time_ms([&] { ip = invariant_basis(c6, 3, par::Mode::parallel); });
    row("invariant basis (C6 regular, deg <= 3)", ts, tp, is == ip);
  }
  return 0;
}
