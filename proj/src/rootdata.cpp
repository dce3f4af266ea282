#include "satake/rootdata.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace satake {

using nlohmann::json;

Rat ShiftCovector::pair(const Weight& w) const {
  Rat s(0);
  for (size_t i = 0; i < w.size(); ++i) s = s + values[i] * Rat(w[i]);
  return s;
}

i64 ShiftCovector::pair_int(const Weight& w) const {
  Rat s = pair(w);
  if (!s.is_integer())
    fail(errc::not_integral, "pairing " + s.str() + " with " + weight_str(w) + " is not integral");
  return s.num;
}

ShiftCovector ShiftCovector::operator+(const ShiftCovector& o) const {
  ShiftCovector r;
  r.values.resize(values.size());
  for (size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] + o.values[i];
  return r;
}

bool BasedRootDatum::sigma_is_identity() const { return mat_equal(sigma, mat_identity(rank)); }

Weight BasedRootDatum::reflect(int i, const Weight& w) const {
  i64 c = coroot_pair(i, w);
  Weight r = w;
  for (int k = 0; k < rank; ++k) r[k] -= c * simple_roots[i][k];
  return r;
}

bool BasedRootDatum::is_dominant(const Weight& w) const {
  for (int i = 0; i < num_simple(); ++i)
    if (coroot_pair(i, w) < 0) return false;
  return true;
}

bool BasedRootDatum::is_antidominant(const Weight& w) const {
  for (int i = 0; i < num_simple(); ++i)
    if (coroot_pair(i, w) > 0) return false;
  return true;
}

std::optional<RatVec> BasedRootDatum::root_span_coords(const Weight& w) const {
  int s = num_simple();
  RatVec coords(s, Rat(0));
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < rank; ++k) coords[i] = coords[i] + simple_coord_solver[i][k] * Rat(w[k]);
  // verify the reconstruction; w may lie outside the root span
  for (int k = 0; k < rank; ++k) {
    Rat acc(0);
    for (int i = 0; i < s; ++i) acc = acc + coords[i] * Rat(simple_roots[i][k]);
    if (acc != Rat(w[k])) return std::nullopt;
  }
  return coords;
}

std::optional<Weight> BasedRootDatum::root_lattice_coords(const Weight& w) const {
  auto coords = root_span_coords(w);
  if (!coords) return std::nullopt;
  Weight r;
  for (auto& c : *coords) {
    if (!c.is_integer()) return std::nullopt;
    r.push_back(c.num);
  }
  return r;
}

namespace {

// d_i c_ij = d_j c_ji with d_i > 0, or nullopt
std::optional<RatVec> symmetrizer(const IntMat& c) {
  int s = (int)c.size();
  RatVec d(s, Rat(0));
  for (int start = 0; start < s; ++start) {
    if (!d[start].is_zero()) continue;
    d[start] = Rat(1);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < s; ++j) {
        if (i == j || c[i][j] == 0) continue;
        if (c[j][i] == 0) return std::nullopt;
        Rat dj = d[i] * Rat(c[i][j]) / Rat(c[j][i]);
        if (d[j].is_zero()) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  return d;
}

void check_finite_type(const IntMat& cartan) {
  int s = (int)cartan.size();
  for (int i = 0; i < s; ++i) {
    if (cartan[i][i] != 2) fail(errc::not_finite_type, "diagonal Cartan entry is not 2");
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) fail(errc::not_finite_type, "positive off-diagonal Cartan entry");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        fail(errc::not_finite_type, "asymmetric zero pattern in Cartan matrix");
    }
  }
  auto d = symmetrizer(cartan);
  if (!d) fail(errc::not_finite_type, "Cartan matrix is not symmetrizable");
  // leading principal minors of the symmetrization must be positive
  for (int k = 1; k <= s; ++k) {
    RatMat S(k, RatVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) S[i][j] = (*d)[i] * Rat(cartan[i][j]);
    if (!rat_det(S).positive())
      fail(errc::not_finite_type, "symmetrized Cartan matrix is not positive definite");
  }
}

void compute_positive_roots(BasedRootDatum& d) {
  int s = d.num_simple();
  std::map<Weight, Weight> roots; // root -> coroot
  std::vector<Weight> queue;
  for (int i = 0; i < s; ++i) {
    roots[d.simple_roots[i]] = d.simple_coroots[i];
    queue.push_back(d.simple_roots[i]);
  }
  while (!queue.empty()) {
    Weight beta = queue.back();
    queue.pop_back();
    Weight covec = roots[beta];
    for (int i = 0; i < s; ++i) {
      Weight nb = d.reflect(i, beta);
      if (roots.count(nb)) continue;
      // contragredient reflection of the coroot
      i64 c = dot(covec, d.simple_roots[i]);
      Weight ncv = covec;
      for (int k = 0; k < d.rank; ++k) ncv[k] -= c * d.simple_coroots[i][k];
      roots[nb] = ncv;
      queue.push_back(nb);
      if (roots.size() > 10000) fail(errc::not_finite_type, "root closure did not terminate");
    }
  }
  struct Entry {
    i64 height;
    Weight root, coroot;
  };
  std::vector<Entry> pos;
  for (auto& [beta, covec] : roots) {
    auto coords = d.root_lattice_coords(beta);
    if (!coords) fail(errc::not_finite_type, "root outside the root lattice");
    bool nonneg = true, nonpos = true;
    i64 h = 0;
    for (i64 x : *coords) {
      h += x;
      nonneg = nonneg && x >= 0;
      nonpos = nonpos && x <= 0;
    }
    if (!nonneg && !nonpos) fail(errc::not_finite_type, "root with mixed-sign coordinates");
    if (nonneg) pos.push_back({h, beta, covec});
  }
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.root < b.root;
  });
  for (auto& e : pos) {
    d.positive_roots.push_back(e.root);
    d.positive_coroots.push_back(e.coroot);
  }
}

RatVec solve_strictly_dominant_on(const BasedRootDatum& d, const std::vector<int>& orbit) {
  RatMat A;
  RatVec b;
  for (int i : orbit) {
    RatVec row;
    for (int k = 0; k < d.rank; ++k) row.push_back(Rat(d.simple_coroots[i][k]));
    A.push_back(row);
    b.push_back(Rat(1));
  }
  auto x = solve_linear(A, b);
  if (!x) fail(errc::not_finite_type, "simple coroots are linearly dependent");
  return *x;
}

IntMat folded_generator(const BasedRootDatum& d, const std::vector<int>& orbit) {
  RatVec v = solve_strictly_dominant_on(d, orbit);
  IntMat M = mat_identity(d.rank);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : orbit) {
      Rat p(0);
      for (int k = 0; k < d.rank; ++k) p = p + Rat(d.simple_coroots[i][k]) * v[k];
      if (!p.positive()) continue;
      // v <- s_i v ; M <- S_i M
      for (int k = 0; k < d.rank; ++k) v[k] = v[k] - p * Rat(d.simple_roots[i][k]);
      IntMat S = mat_identity(d.rank);
      for (int r = 0; r < d.rank; ++r)
        for (int k = 0; k < d.rank; ++k) S[r][k] -= d.simple_roots[i][r] * d.simple_coroots[i][k];
      M = mat_mul(S, M);
      moved = true;
    }
  }
  return M;
}

} // namespace

BasedRootDatum validate(BasedRootDatum d) {
  int s = d.num_simple();
  if (d.rank <= 0) fail(errc::not_finite_type, "rank must be positive");
  if ((int)d.simple_coroots.size() != s)
    fail(errc::not_finite_type, "simple_roots and simple_coroots differ in length");
  for (auto& r : d.simple_roots)
    if ((int)r.size() != d.rank) fail(errc::not_finite_type, "simple root of wrong length");
  for (auto& r : d.simple_coroots)
    if ((int)r.size() != d.rank) fail(errc::not_finite_type, "simple coroot of wrong length");

  d.cartan.assign(s, Weight(s, 0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) d.cartan[i][j] = dot(d.simple_coroots[i], d.simple_roots[j]);
  check_finite_type(d.cartan);

  // linear independence of the simple roots, and the coordinate solver
  // R = (A^T A)^{-1} A^T with columns of A the simple roots
  {
    RatMat G(s, RatVec(s, Rat(0)));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) G[i][j] = Rat(dot(d.simple_roots[i], d.simple_roots[j]));
    if (s > 0 && rat_det(G).is_zero())
      fail(errc::not_finite_type, "simple roots are linearly dependent");
    d.simple_coord_solver.assign(s, RatVec(d.rank, Rat(0)));
    for (int k = 0; k < d.rank; ++k) {
      RatVec rhs(s);
      for (int i = 0; i < s; ++i) rhs[i] = Rat(d.simple_roots[i][k]);
      auto col = solve_linear(G, rhs);
      if (!col) fail(errc::not_finite_type, "coordinate solver failed");
      for (int i = 0; i < s; ++i) d.simple_coord_solver[i][k] = (*col)[i];
    }
  }

  compute_positive_roots(d);

  // sigma: default identity
  if (d.sigma.empty()) d.sigma = mat_identity(d.rank);
  if ((int)d.sigma.size() != d.rank)
    fail(errc::pinning_violated, "sigma_matrix of wrong size");
  for (auto& row : d.sigma)
    if ((int)row.size() != d.rank) fail(errc::pinning_violated, "sigma_matrix of wrong size");

  // induced permutation of the simple roots
  std::vector<int> perm(s, -1);
  for (int i = 0; i < s; ++i) {
    Weight im = d.apply_sigma(d.simple_roots[i]);
    for (int j = 0; j < s; ++j)
      if (im == d.simple_roots[j]) perm[i] = j;
    if (perm[i] < 0)
      fail(errc::pinning_violated, "sigma does not permute the simple roots");
  }
  if (!d.sigma_perm.empty() && d.sigma_perm != perm)
    fail(errc::pinning_violated, "sigma_permutation does not match sigma_matrix");
  d.sigma_perm = perm;

  // contragredient action must send coroot_i to coroot_{perm(i)}:
  // coroot_i == sigma^T coroot_{perm(i)}
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < d.rank; ++k) {
      i64 acc = 0;
      for (int l = 0; l < d.rank; ++l) acc += d.simple_coroots[perm[i]][l] * d.sigma[l][k];
      if (acc != d.simple_coroots[i][k])
        fail(errc::pinning_violated, "sigma does not act compatibly on the simple coroots");
    }
  }

  // finite order
  {
    IntMat P = d.sigma;
    int order = 1;
    while (!mat_equal(P, mat_identity(d.rank))) {
      P = mat_mul(P, d.sigma);
      if (++order > 120) fail(errc::not_finite_order, "sigma_matrix order exceeds 120");
    }
    d.sigma_order = order;
  }

  // sigma orbits of simple indices, by smallest member
  {
    std::vector<bool> seen(s, false);
    for (int i = 0; i < s; ++i) {
      if (seen[i]) continue;
      std::vector<int> orbit;
      int j = i;
      while (!seen[j]) {
        seen[j] = true;
        orbit.push_back(j);
        j = d.sigma_perm[j];
      }
      std::sort(orbit.begin(), orbit.end());
      d.sigma_orbits.push_back(orbit);
    }
  }
  for (auto& orbit : d.sigma_orbits) d.folded_gens.push_back(folded_generator(d, orbit));

  // X^sigma
  {
    IntMat M = d.sigma;
    for (int i = 0; i < d.rank; ++i) M[i][i] -= 1;
    d.fixed_basis = integer_kernel(M);
  }

  d.validated = true;
  return d;
}

ShiftCovector rho_ad(const BasedRootDatum& d) {
  ShiftCovector r;
  r.values.assign(d.rank, Rat(0));
  for (auto& cv : d.positive_coroots)
    for (int k = 0; k < d.rank; ++k) r.values[k] = r.values[k] + Rat(cv[k], 2);
  return r;
}

ShiftCovector two_rho(const BasedRootDatum& d) {
  ShiftCovector r;
  r.values.assign(d.rank, Rat(0));
  for (auto& cv : d.positive_coroots)
    for (int k = 0; k < d.rank; ++k) r.values[k] = r.values[k] + Rat(cv[k]);
  return r;
}

ShiftCovector shift_from_weight(const BasedRootDatum& d, const Weight& lambda) {
  if ((int)lambda.size() != d.rank) fail(errc::parse_error, "weight of wrong length");
  for (int i = 0; i < d.num_simple(); ++i)
    if (dot(lambda, d.simple_roots[i]) < 0)
      fail(errc::not_dominant, "weight " + weight_str(lambda) + " pairs negatively with a simple root");
  ShiftCovector r;
  for (i64 x : lambda) r.values.push_back(Rat(x));
  return r;
}

bool dominance_leq(const BasedRootDatum& d, const Weight& lo, const Weight& hi) {
  auto coords = d.root_lattice_coords(weight_sub(hi, lo));
  if (!coords) return false;
  for (i64 x : *coords)
    if (x < 0) return false;
  return true;
}

// -- catalog --------------------------------------------------------------

namespace {

BasedRootDatum make_gl(int n, const std::string& name) {
  BasedRootDatum d;
  d.name = name;
  d.rank = n;
  for (int i = 0; i + 1 < n; ++i) {
    Weight r(n, 0);
    r[i] = 1;
    r[i + 1] = -1;
    d.simple_roots.push_back(r);
    d.simple_coroots.push_back(r);
  }
  return d;
}

// unitary involution on the GL_n lattice: v -> -J v with J the
// antidiagonal permutation
BasedRootDatum make_u(int n, const std::string& name) {
  BasedRootDatum d = make_gl(n, name);
  d.sigma.assign(n, Weight(n, 0));
  for (int i = 0; i < n; ++i) d.sigma[i][n - 1 - i] = -1;
  return d;
}

IntMat cartan_a(int m) { // A_m Cartan matrix
  IntMat c(m, Weight(m, 0));
  for (int i = 0; i < m; ++i) {
    c[i][i] = 2;
    if (i > 0) c[i][i - 1] = -1;
    if (i + 1 < m) c[i][i + 1] = -1;
  }
  return c;
}

// G = SL_n, dual group PGL_n: lattice is the root lattice of A_{n-1}
BasedRootDatum make_sl(int n, const std::string& name) {
  BasedRootDatum d;
  d.name = name;
  d.rank = n - 1;
  IntMat c = cartan_a(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    Weight r(n - 1, 0);
    r[i] = 1;
    d.simple_roots.push_back(r);
    d.simple_coroots.push_back(c[i]);
  }
  return d;
}

// G = PGL_n, dual group SL_n: lattice is the weight lattice of A_{n-1}
BasedRootDatum make_pgl(int n, const std::string& name) {
  BasedRootDatum d;
  d.name = name;
  d.rank = n - 1;
  IntMat c = cartan_a(n - 1);
  for (int j = 0; j < n - 1; ++j) {
    Weight root(n - 1, 0);
    for (int i = 0; i < n - 1; ++i) root[i] = c[i][j];
    Weight coroot(n - 1, 0);
    coroot[j] = 1;
    d.simple_roots.push_back(root);
    d.simple_coroots.push_back(coroot);
  }
  return d;
}

// G = Sp_4, dual group SO_5 (type B_2 on the dual side)
BasedRootDatum make_sp4() {
  BasedRootDatum d;
  d.name = "Sp4";
  d.rank = 2;
  d.simple_roots = {{1, -1}, {0, 1}};
  d.simple_coroots = {{1, -1}, {0, 2}};
  return d;
}

BasedRootDatum make_g2() {
  BasedRootDatum d;
  d.name = "G2";
  d.rank = 2;
  d.simple_roots = {{1, 0}, {0, 1}};
  d.simple_coroots = {{2, -1}, {-3, 2}};
  return d;
}

// GL_n x GL_n with factor swap (Weil restriction shadow)
BasedRootDatum make_gl_square(int n, const std::string& name) {
  BasedRootDatum d;
  d.name = name;
  d.rank = 2 * n;
  for (int block = 0; block < 2; ++block)
    for (int i = 0; i + 1 < n; ++i) {
      Weight r(2 * n, 0);
      r[block * n + i] = 1;
      r[block * n + i + 1] = -1;
      d.simple_roots.push_back(r);
      d.simple_coroots.push_back(r);
    }
  d.sigma.assign(2 * n, Weight(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    d.sigma[i][n + i] = 1;
    d.sigma[n + i][i] = 1;
  }
  return d;
}

std::map<std::string, BasedRootDatum> build_catalog() {
  std::map<std::string, BasedRootDatum> c;
  auto put = [&](BasedRootDatum d) {
    std::string key = d.name; // evaluation order: d is moved from below
    c[key] = validate(std::move(d));
  };
  for (int n = 1; n <= 4; ++n) put(make_gl(n, "GL" + std::to_string(n)));
  for (int n = 2; n <= 3; ++n) {
    put(make_sl(n, "SL" + std::to_string(n)));
    put(make_pgl(n, "PGL" + std::to_string(n)));
  }
  put(make_sp4());
  put(make_g2());
  for (int n = 2; n <= 4; ++n) put(make_u(n, "U" + std::to_string(n)));
  put(make_gl_square(2, "GL2xGL2"));
  put(make_gl_square(3, "GL3xGL3"));
  return c;
}

const std::map<std::string, BasedRootDatum>& the_catalog() {
  static const std::map<std::string, BasedRootDatum> c = build_catalog();
  return c;
}

} // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (auto& [k, v] : the_catalog()) names.push_back(k);
  return names;
}

BasedRootDatum catalog(const std::string& name) {
  auto& c = the_catalog();
  auto it = c.find(name);
  if (it == c.end()) fail(errc::unknown_name, "no catalog datum named '" + name + "'");
  return it->second;
}

// -- file format ----------------------------------------------------------

BasedRootDatum datum_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse_error, e.what());
  }
  BasedRootDatum d;
  try {
    d.name = j.at("name").get<std::string>();
    d.rank = j.at("rank").get<int>();
    d.simple_roots = j.at("simple_roots").get<std::vector<Weight>>();
    d.simple_coroots = j.at("simple_coroots").get<std::vector<Weight>>();
    if (j.contains("sigma_matrix")) {
      auto flat = j.at("sigma_matrix").get<std::vector<i64>>();
      if ((int)flat.size() != d.rank * d.rank)
        fail(errc::parse_error, "sigma_matrix must have rank*rank entries (row-major)");
      d.sigma.assign(d.rank, Weight(d.rank, 0));
      for (int i = 0; i < d.rank; ++i)
        for (int k = 0; k < d.rank; ++k) d.sigma[i][k] = flat[i * d.rank + k];
    }
    if (j.contains("sigma_permutation"))
      d.sigma_perm = j.at("sigma_permutation").get<std::vector<int>>();
  } catch (const satake_error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::parse_error, e.what());
  }
  return validate(std::move(d));
}

std::string datum_to_json_text(const BasedRootDatum& d) {
  json j;
  j["name"] = d.name;
  j["rank"] = d.rank;
  j["simple_roots"] = d.simple_roots;
  j["simple_coroots"] = d.simple_coroots;
  std::vector<i64> flat;
  for (auto& row : d.sigma)
    for (i64 x : row) flat.push_back(x);
  j["sigma_matrix"] = flat;
  j["sigma_permutation"] = d.sigma_perm;
  return j.dump(2);
}

BasedRootDatum datum_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return datum_from_json_text(ss.str());
}

} // namespace satake
