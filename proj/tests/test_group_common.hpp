#ifndef TESTS_TEST_GROUP_COMMON_HPP
#define TESTS_TEST_GROUP_COMMON_HPP

#include <string>
#include <vector>

#include "invariants/group.hpp"
#include "invariants/poly_io.hpp"
#include "invariants/scalar_io.hpp"

namespace testutil {

using namespace invariants;

inline Matrix<Cyclotomic> mat(unsigned order, const std::vector<std::vector<std::string>>& rows) {
  Matrix<Cyclotomic> m(rows.size(), rows[0].size(), Cyclotomic(0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = parse_scalar(rows[i][j], order);
  return m;
}

// The quaternion group on C^2 from the worked example, with its five
// irreducible models. The Sta model carries the distinguished basis with
// i v_x = v_y, j v_x = z v_x, so that v_x -> x, v_y -> y is equivariant for
// the natural action on coordinates.
inline GroupData make_q8() {
  GroupData gd;
  RingCtxPtr ring = make_ring({"x", "y"});
  auto gi = mat(4, {{"0", "-1"}, {"1", "0"}});
  auto gj = mat(4, {{"-z", "0"}, {"0", "z"}});
  gd.group = enumerate_group({gi, gj}, ring, 4);
  gd.models.push_back(extend_model(gd.group, "1", {mat(4, {{"1"}}), mat(4, {{"1"}})}));
  gd.models.push_back(extend_model(gd.group, "i", {mat(4, {{"1"}}), mat(4, {{"-1"}})}));
  gd.models.push_back(extend_model(gd.group, "j", {mat(4, {{"-1"}}), mat(4, {{"1"}})}));
  gd.models.push_back(extend_model(gd.group, "k", {mat(4, {{"-1"}}), mat(4, {{"-1"}})}));
  gd.models.push_back(extend_model(gd.group, "Sta",
                                   {mat(4, {{"0", "-1"}, {"1", "0"}}),
                                    mat(4, {{"z", "0"}, {"0", "-z"}})}));
  return gd;
}

// Cyclic C_n acting as diag(zeta, zeta^-1) with all n characters.
inline GroupData make_cn_diag(unsigned n) {
  GroupData gd;
  RingCtxPtr ring = make_ring({"x", "y"});
  auto g = mat(n, {{"z", "0"}, {"0", "z^-1"}});
  gd.group = enumerate_group({g}, ring, n);
  for (unsigned k = 0; k < n; ++k) {
    std::string zk = "z^" + std::to_string(k);
    gd.models.push_back(extend_model(gd.group, "chi" + std::to_string(k), {mat(n, {{zk}})}));
  }
  return gd;
}

// C_3 on one variable by zeta_3.
inline GroupData make_c3_1d() {
  GroupData gd;
  RingCtxPtr ring = make_ring({"x"});
  auto g = mat(3, {{"z"}});
  gd.group = enumerate_group({g}, ring, 3);
  for (unsigned k = 0; k < 3; ++k) {
    std::string zk = "z^" + std::to_string(k);
    gd.models.push_back(extend_model(gd.group, "chi" + std::to_string(k), {mat(3, {{zk}})}));
  }
  return gd;
}

// Trivial group on one variable.
inline GroupData make_trivial() {
  GroupData gd;
  RingCtxPtr ring = make_ring({"x"});
  gd.group = enumerate_group({mat(1, {{"1"}})}, ring, 1);
  gd.models.push_back(extend_model(gd.group, "1", {mat(1, {{"1"}})}));
  return gd;
}

// Cyclic regular representation of order n (cyclic shift of coordinates).
inline GroupData make_cyclic_regular(unsigned n) {
  GroupData gd;
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  RingCtxPtr ring = make_ring(vars);
  Matrix<Cyclotomic> shift(n, n, Cyclotomic(0));
  for (unsigned j = 0; j < n; ++j) shift.at((j + 1) % n, j) = Cyclotomic(1);
  gd.group = enumerate_group({shift}, ring, n);
  for (unsigned k = 0; k < n; ++k) {
    Matrix<Cyclotomic> chi(1, 1, Cyclotomic::zeta(n, k));
    gd.models.push_back(extend_model(gd.group, "chi" + std::to_string(k), {chi}));
  }
  return gd;
}

// A4 in its canonical permutation representation with models 1, chi, chi2
// (cube-root characters) and the three-dimensional W.
inline GroupData make_a4perm() {
  GroupData gd;
  RingCtxPtr ring = make_ring({"x1", "x2", "x3", "x4"});
  // sigma = (123), tau = (12)(34) as permutation matrices.
  auto sigma = mat(3, {{"0", "0", "1", "0"},
                       {"1", "0", "0", "0"},
                       {"0", "1", "0", "0"},
                       {"0", "0", "0", "1"}});
  auto tau = mat(3, {{"0", "1", "0", "0"},
                     {"1", "0", "0", "0"},
                     {"0", "0", "0", "1"},
                     {"0", "0", "1", "0"}});
  gd.group = enumerate_group({sigma, tau}, ring, 3);
  gd.models.push_back(extend_model(gd.group, "1", {mat(3, {{"1"}}), mat(3, {{"1"}})}));
  gd.models.push_back(extend_model(gd.group, "chi", {mat(3, {{"z"}}), mat(3, {{"1"}})}));
  gd.models.push_back(extend_model(gd.group, "chi2", {mat(3, {{"z^2"}}), mat(3, {{"1"}})}));
  // W on the sum-zero subspace with basis e1-e2, e2-e3, e3-e4.
  auto wsigma = mat(3, {{"0", "-1", "1"}, {"1", "-1", "1"}, {"0", "0", "1"}});
  auto wtau = mat(3, {{"-1", "1", "0"}, {"0", "1", "0"}, {"0", "1", "-1"}});
  gd.models.push_back(extend_model(gd.group, "W", {wsigma, wtau}));
  return gd;
}

// S3 acting by its two-dimensional standard representation over Q.
inline GroupData make_s3std() {
  GroupData gd;
  RingCtxPtr ring = make_ring({"x", "y"});
  auto r = mat(1, {{"0", "-1"}, {"1", "-1"}});
  auto s = mat(1, {{"0", "1"}, {"1", "0"}});
  gd.group = enumerate_group({r, s}, ring, 1);
  gd.models.push_back(extend_model(gd.group, "1", {mat(1, {{"1"}}), mat(1, {{"1"}})}));
  gd.models.push_back(extend_model(gd.group, "sgn", {mat(1, {{"1"}}), mat(1, {{"-1"}})}));
  gd.models.push_back(extend_model(gd.group, "Sta", {r, s}));
  return gd;
}

inline Poly parse_in(const GroupData& gd, const std::string& s) {
  return parse_poly(s, gd.group.xring, gd.group.field_order);
}

}  // namespace testutil

#endif
