#pragma once

// Affine Cartan data generated from Dynkin diagram descriptions.
//
// Node numbering follows the diagrams listed in the README. For A_{2n}^(2) the
// numbering is reversed relative to Kac's book: node 0 is the end with the
// largest symmetrizer and theta = 2(alpha_1 + ... + alpha_n).

#include "loomfold/core.hpp"
#include "loomfold/lattice_vec.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace loomfold {

enum class Family { A, B, C, D, E, F, G };

inline char family_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

/// One row of the affine classification. `family` and `N` name the algebra X_N^(r);
/// `n` is the bound of the index set I = {0,...,n}.
struct AffineType {
  Family family = Family::A;
  int n = 1;
  int r = 1;
  int N = 1;

  friend bool operator==(const AffineType&, const AffineType&) = default;

  bool twisted() const { return r > 1; }
  /// A_{2n}^(2), including A_2^(2).
  bool is_a_even_twisted() const { return family == Family::A && r == 2 && N % 2 == 0; }
};

namespace detail {

inline bool valid_row(Family f, int N, int r) {
  switch (r) {
    case 1:
      switch (f) {
        case Family::A: return N >= 1;
        case Family::B: return N >= 3;
        case Family::C: return N >= 2;
        case Family::D: return N >= 4;
        case Family::E: return N >= 6 && N <= 8;
        case Family::F: return N == 4;
        case Family::G: return N == 2;
      }
      return false;
    case 2:
      // A_{2n}^(2) with n >= 1, A_{2n-1}^(2) with n >= 3, D_{n+1}^(2) with n >= 2, E_6^(2).
      if (f == Family::A) return N >= 2 && (N % 2 == 0 || N >= 5);
      if (f == Family::D) return N >= 3;
      if (f == Family::E) return N == 6;
      return false;
    case 3: return f == Family::D && N == 4;
    default: return false;
  }
}

inline int index_bound(Family f, int N, int r) {
  if (r == 1) return N;
  if (r == 3) return 2;
  switch (f) {
    case Family::A: return N % 2 == 0 ? N / 2 : (N + 1) / 2;
    case Family::D: return N - 1;
    case Family::E: return 4;
    default: return 0;
  }
}

}  // namespace detail

/// Builds the type X_N^(r). Throws InvalidType for combinations outside the table.
inline AffineType make_type(Family f, int N, int r) {
  if (!detail::valid_row(f, N, r))
    throw InvalidType(std::string(1, family_char(f)) + std::to_string(N) + "^(" + std::to_string(r) +
                      ") is not an affine type of the supported table");
  return AffineType{f, detail::index_bound(f, N, r), r, N};
}

/// Shell-safe name, e.g. "A5~2".
inline std::string type_name(const AffineType& t) {
  return std::string(1, family_char(t.family)) + std::to_string(t.N) + "~" + std::to_string(t.r);
}

/// Every table row whose index bound n is at most max_n, in a fixed canonical order.
inline std::vector<AffineType> table_types(int max_n) {
  std::vector<AffineType> out;
  auto add = [&](Family f, int N, int r) {
    if (detail::valid_row(f, N, r) && detail::index_bound(f, N, r) <= max_n) out.push_back(make_type(f, N, r));
  };
  for (int N = 1; N <= max_n; ++N) add(Family::A, N, 1);
  for (int N = 3; N <= max_n; ++N) add(Family::B, N, 1);
  for (int N = 2; N <= max_n; ++N) add(Family::C, N, 1);
  for (int N = 4; N <= max_n; ++N) add(Family::D, N, 1);
  for (int N = 6; N <= 8; ++N) add(Family::E, N, 1);
  add(Family::F, 4, 1);
  add(Family::G, 2, 1);
  for (int N = 2; N <= 2 * max_n; ++N) add(Family::A, N, 2);
  for (int N = 3; N <= max_n + 1; ++N) add(Family::D, N, 2);
  add(Family::E, 6, 2);
  add(Family::D, 4, 3);
  return out;
}

inline std::vector<AffineType> twisted_types(int max_n) {
  std::vector<AffineType> out;
  for (const auto& t : table_types(max_n))
    if (t.twisted()) out.push_back(t);
  return out;
}

/// Edge of a Dynkin diagram. With m > 1 the arrow points from u to the shorter root v,
/// giving a_{vu} = -m and a_{uv} = -1.
struct Bond {
  int u;
  int v;
  int m = 1;
};

struct AffineData {
  AffineType type;
  IntMatrix gcm;
  std::vector<int> kac;
  std::vector<int> dual_kac;
  std::vector<int> sym;
  LatticeVec delta;
  LatticeVec theta;  // finite coordinates

  int n() const { return type.n; }
  int a(int i, int j) const { return gcm.at(i).at(j); }
  int d(int i) const { return sym.at(i); }
  int max_finite_sym() const {
    int m = 0;
    for (int i = 1; i <= n(); ++i) m = std::max(m, sym[i]);
    return m;
  }
};

namespace detail {

inline std::vector<Bond> chain(int from, int to) {
  std::vector<Bond> b;
  for (int i = from; i < to; ++i) b.push_back({i, i + 1});
  return b;
}

inline std::vector<Bond> diagram(const AffineType& t) {
  const int n = t.n;
  std::vector<Bond> b;
  auto append = [&](std::vector<Bond> more) { b.insert(b.end(), more.begin(), more.end()); };
  if (t.r == 1) {
    switch (t.family) {
      case Family::A:
        append(chain(0, n));
        b.push_back({n, 0});
        break;
      case Family::B:
        b = {{0, 2}, {1, 2}};
        append(chain(2, n - 1));
        b.push_back({n - 1, n, 2});
        break;
      case Family::C:
        b.push_back({0, 1, 2});
        append(chain(1, n - 1));
        b.push_back({n, n - 1, 2});
        break;
      case Family::D:
        b = {{0, 2}, {1, 2}};
        append(chain(2, n - 2));
        b.push_back({n - 1, n - 2});
        b.push_back({n, n - 2});
        break;
      case Family::E:
        if (n == 6) {
          append(chain(1, 5));
          b.push_back({6, 3});
          b.push_back({0, 6});
        } else if (n == 7) {
          append(chain(0, 6));
          b.push_back({7, 3});
        } else {
          append(chain(0, 7));
          b.push_back({8, 5});
        }
        break;
      case Family::F:
        b = {{0, 1}, {1, 2}, {2, 3, 2}, {3, 4}};
        break;
      case Family::G:
        b = {{0, 1}, {1, 2, 3}};
        break;
    }
    return b;
  }
  if (t.r == 3) return {{0, 1}, {2, 1, 3}};
  switch (t.family) {
    case Family::A:
      if (t.N % 2 == 0) {
        if (n == 1) return {{0, 1, 4}};
        b.push_back({0, 1, 2});
        append(chain(1, n - 1));
        b.push_back({n - 1, n, 2});
      } else {
        b.push_back({0, 2});
        b.push_back({1, 2});
        append(chain(2, n - 1));
        b.push_back({n, n - 1, 2});
      }
      return b;
    case Family::D:
      b.push_back({1, 0, 2});
      append(chain(1, n - 1));
      b.push_back({n - 1, n, 2});
      return b;
    case Family::E:
      return {{0, 1}, {1, 2}, {3, 2, 2}, {3, 4}};
    default:
      return b;
  }
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

/// Positive primitive integer vector spanning the kernel of a corank-1 matrix,
/// normalized so that entry 0 is as small as possible.
inline std::vector<int> null_vector(const IntMatrix& a) {
  const std::size_t m = a.size();
  // Solve a restricted to columns 1..m-1 against -column 0 on rows 1..m-1.
  RationalMatrix sub(m - 1, m - 1);
  std::vector<Rational> rhs(m - 1);
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < m; ++j) sub(i - 1, j - 1) = a[i][j];
    rhs[i - 1] = -a[i][0];
  }
  std::vector<Rational> x = sub.inverse() * rhs;
  std::vector<Rational> v{Rational(1)};
  v.insert(v.end(), x.begin(), x.end());
  std::int64_t den = 1;
  for (const auto& c : v) den = lcm64(den, c.denominator());
  std::int64_t g = 0;
  std::vector<std::int64_t> iv;
  for (const auto& c : v) {
    iv.push_back(to_int(c * den));
    g = std::gcd(g, iv.back());
  }
  std::vector<int> out;
  for (auto c : iv) out.push_back(static_cast<int>(c / g));
  return out;
}

}  // namespace detail

/// Symmetrizer of a symmetrizable connected GCM: d_i a_ij = d_j a_ji, min d_i = 1.
inline std::vector<int> symmetrizer(const IntMatrix& a) {
  const std::size_t m = a.size();
  std::vector<Rational> d(m, Rational(0));
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || a[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rational(a[i][j], a[j][i]);
      stack.push_back(j);
    }
  }
  std::int64_t den = 1;
  for (const auto& x : d) {
    if (x == 0) throw Error("diagram is not connected");
    den = detail::lcm64(den, x.denominator());
  }
  std::vector<std::int64_t> iv;
  std::int64_t g = 0;
  for (const auto& x : d) {
    iv.push_back(to_int(x * den));
    g = std::gcd(g, iv.back());
  }
  std::vector<int> out;
  for (auto x : iv) out.push_back(static_cast<int>(x / g));
  return out;
}

inline IntMatrix gcm_from_bonds(int size, const std::vector<Bond>& bonds) {
  IntMatrix a(size, std::vector<int>(size, 0));
  for (int i = 0; i < size; ++i) a[i][i] = 2;
  for (const auto& b : bonds) {
    a[b.v][b.u] = -b.m;
    a[b.u][b.v] = -1;
  }
  return a;
}

inline AffineData build_affine(const AffineType& type) {
  if (!detail::valid_row(type.family, type.N, type.r) || detail::index_bound(type.family, type.N, type.r) != type.n)
    throw InvalidType("not an affine type of the supported table: " + type_name(type));
  AffineData data;
  data.type = type;
  const int n = type.n;
  if (type.family == Family::A && type.r == 1 && n == 1) {
    data.gcm = {{2, -2}, {-2, 2}};
  } else {
    data.gcm = gcm_from_bonds(n + 1, detail::diagram(type));
  }
  data.kac = detail::null_vector(data.gcm);
  IntMatrix tr(n + 1, std::vector<int>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) tr[i][j] = data.gcm[j][i];
  data.dual_kac = detail::null_vector(tr);
  data.sym = symmetrizer(data.gcm);
  std::vector<std::int64_t> dl(data.kac.begin(), data.kac.end());
  data.delta = LatticeVec::from_ints(dl, true);
  dl.erase(dl.begin());
  data.theta = LatticeVec::from_ints(dl, false);
  return data;
}

/// (v, w) = sum_{i,j} v_i w_j d_i a_ij. Both vectors affine, or both finite.
inline Rational bilinear(const AffineData& data, const LatticeVec& v, const LatticeVec& w) {
  if (v.is_affine() != w.is_affine() || v.rank() != data.n() || w.rank() != data.n())
    throw DimensionMismatch("bilinear: vectors do not belong to " + type_name(data.type));
  Rational out = 0;
  for (int i = v.first_index(); i <= v.last_index(); ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (int j = w.first_index(); j <= w.last_index(); ++j) row += w[j] * data.gcm[i][j];
    out += v[i] * row * data.sym[i];
  }
  return out;
}

/// <h_i, v> = sum_j a_ij v_j.
inline Rational pairing_h(const AffineData& data, int i, const LatticeVec& v) {
  Rational out = 0;
  for (int j = v.first_index(); j <= v.last_index(); ++j) out += v[j] * data.gcm[i][j];
  return out;
}

}  // namespace loomfold
