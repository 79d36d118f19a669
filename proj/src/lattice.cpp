#include "lattice.hpp"

#include <algorithm>

#include "error.hpp"

namespace tropgw::lat {

BigInt dot(const IVec& a, const IVec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec scaled(const IVec& v, const BigInt& c) {
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

void add_scaled(IVec& target, const IVec& v, const BigInt& c) {
  for (std::size_t i = 0; i < v.size(); ++i) target[i] += v[i] * c;
}

IMat integer_kernel(const IMat& rows, int dim) {
  // Column reduction with a unimodular transform: bring A into column
  // echelon form while applying the same column operations to the identity;
  // the columns that end up zero in A give a kernel basis.
  const int r = static_cast<int>(rows.size());
  // column-major copies
  std::vector<IVec> a(dim, IVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < dim; ++j) a[j][i] = rows[i][j];
  std::vector<IVec> u(dim, IVec(dim, 0));
  for (int j = 0; j < dim; ++j) u[j][j] = 1;

  int lead = 0;
  for (int row = 0; row < r && lead < dim; ++row) {
    while (true) {
      int best = -1;
      for (int j = lead; j < dim; ++j)
        if (a[j][row] != 0 && (best < 0 || abs(a[j][row]) < abs(a[best][row]))) best = j;
      if (best < 0) break;
      std::swap(a[lead], a[best]);
      std::swap(u[lead], u[best]);
      bool cleared = true;
      for (int j = lead + 1; j < dim; ++j) {
        if (a[j][row] == 0) continue;
        BigInt q = a[j][row] / a[lead][row];  // truncated division
        if (q != 0) {
          add_scaled(a[j], a[lead], -q);
          add_scaled(u[j], u[lead], -q);
        }
        if (a[j][row] != 0) cleared = false;
      }
      if (cleared) {
        ++lead;
        break;
      }
    }
  }

  IMat kernel;
  for (int j = lead; j < dim; ++j) {
    IVec row(dim);
    for (int i = 0; i < dim; ++i) row[i] = u[j][i];
    kernel.push_back(std::move(row));
  }
  return kernel;
}

IMat saturate(const IMat& rows, int dim) { return integer_kernel(integer_kernel(rows, dim), dim); }

namespace {

// Row echelon over Q. If rhs is non-null the system rows^T x = rhs is
// reduced instead, so coordinates can be read off the pivots.
struct Gauss {
  std::vector<std::vector<Rational>> m;  // rows x cols
  std::vector<int> pivot_col;
};

Gauss echelon(const IMat& rows, const IVec* rhs) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? (rhs ? rhs->size() : 0) : rows[0].size();
  // build transposed system: columns are the given rows, solving rows^T x = rhs
  // (used for rational_coords); without rhs we just rank the rows directly.
  Gauss g;
  if (rhs) {
    g.m.assign(c, std::vector<Rational>(r + 1, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) g.m[j][i] = Rational(rows[i][j], 1);
    for (std::size_t j = 0; j < c; ++j) g.m[j][r] = Rational((*rhs)[j], 1);
  } else {
    g.m.assign(r, std::vector<Rational>(c, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) g.m[i][j] = Rational(rows[i][j], 1);
  }

  const std::size_t nrows = g.m.size();
  const std::size_t ncols = nrows == 0 ? 0 : g.m[0].size();
  const std::size_t limit = rhs ? ncols - 1 : ncols;  // exclude rhs column from pivots
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < nrows; ++col) {
    std::size_t piv = row;
    while (piv < nrows && g.m[piv][col].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(g.m[row], g.m[piv]);
    Rational inv = Rational(1) / g.m[row][col];
    for (std::size_t j = col; j < ncols; ++j) g.m[row][j] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || g.m[i][col].is_zero()) continue;
      Rational f = g.m[i][col];
      for (std::size_t j = col; j < ncols; ++j) g.m[i][j] -= f * g.m[row][j];
    }
    g.pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  return g;
}

}  // namespace

int rational_rank(const IMat& rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(echelon(rows, nullptr).pivot_col.size());
}

std::optional<std::vector<Rational>> rational_coords(const IMat& rows, const IVec& v) {
  const std::size_t r = rows.size();
  if (r == 0) {
    for (const BigInt& x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  Gauss g = echelon(rows, &v);
  const std::size_t nrows = g.m.size();
  // inconsistent iff a row has zero coefficients but nonzero rhs
  std::vector<Rational> coords(r, Rational(0));
  for (std::size_t i = 0; i < nrows; ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j < r; ++j)
      if (!g.m[i][j].is_zero()) {
        all_zero = false;
        break;
      }
    if (all_zero && !g.m[i][r].is_zero()) return std::nullopt;
  }
  for (std::size_t p = 0; p < g.pivot_col.size(); ++p) coords[g.pivot_col[p]] = g.m[p][r];
  return coords;
}

bool in_rational_span(const IMat& rows, const IVec& v) {
  return rational_coords(rows, v).has_value();
}

std::optional<IVec> integer_coords(const IMat& basis, const IVec& v) {
  auto coords = rational_coords(basis, v);
  if (!coords) return std::nullopt;
  IVec out(coords->size());
  for (std::size_t i = 0; i < coords->size(); ++i) {
    if (!(*coords)[i].is_integer()) return std::nullopt;
    out[i] = (*coords)[i].num();
  }
  return out;
}

void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

IVec solve_unit_dot(const IVec& phi) {
  // fold extended gcds: the running combination realizes the running gcd
  IVec x(phi.size(), 0);
  BigInt g = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] == 0) continue;
    if (g == 0) {
      g = abs(phi[i]);
      x[i] = phi[i] > 0 ? 1 : -1;
      continue;
    }
    BigInt g2, a, b;
    extended_gcd(g, phi[i], g2, a, b);
    for (std::size_t j = 0; j < i; ++j) x[j] *= a;
    x[i] = b;
    g = g2;
  }
  if (g != 1) throw DomainError("lattice: vector is not primitive");
  return x;
}

IVec primitive_normal(int dim, const IMat& lineality, const IMat& sigma_rays,
                      const IMat& tau_rays) {
  IMat sigma_span(lineality);
  sigma_span.insert(sigma_span.end(), sigma_rays.begin(), sigma_rays.end());
  IMat tau_span(lineality);
  tau_span.insert(tau_span.end(), tau_rays.begin(), tau_rays.end());

  IMat bs = saturate(sigma_span, dim);
  IMat bt = saturate(tau_span, dim);
  const int m = static_cast<int>(bs.size());
  if (static_cast<int>(bt.size()) != m - 1)
    throw DomainError("primitive_normal: tau is not a facet of sigma");
  for (const IVec& row : bt)
    if (!in_rational_span(bs, row))
      throw DomainError("primitive_normal: tau is not contained in sigma");

  // tau's lattice in sigma-lattice coordinates
  IMat t_coords;
  for (const IVec& row : bt) {
    auto c = integer_coords(bs, row);
    if (!c) throw DomainError("primitive_normal: saturation failure");
    t_coords.push_back(std::move(*c));
  }
  IMat kernel = integer_kernel(t_coords, m);
  if (kernel.size() != 1) throw DomainError("primitive_normal: quotient is not rank one");
  const IVec& phi = kernel[0];

  // orient into sigma using a ray of sigma outside tau's span
  const IVec* witness = nullptr;
  for (const IVec& ray : sigma_rays)
    if (!in_rational_span(tau_span, ray)) {
      witness = &ray;
      break;
    }
  if (!witness) throw DomainError("primitive_normal: sigma does not extend tau");
  auto wc = integer_coords(bs, *witness);
  if (!wc) throw DomainError("primitive_normal: ray escapes sigma's lattice");
  BigInt orient = dot(phi, *wc);
  if (orient == 0) throw DomainError("primitive_normal: degenerate orientation");

  IVec unit = solve_unit_dot(phi);
  IVec u(dim, 0);
  for (int i = 0; i < m; ++i) add_scaled(u, bs[i], unit[i]);
  if (orient < 0)
    for (BigInt& c : u) c = -c;
  return u;
}

}  // namespace tropgw::lat
