#include "cutrank/polytope.hpp"

#include <algorithm>

#include "cutrank/errors.hpp"

namespace cutrank {

std::string rel_symbol(Rel r) {
  switch (r) {
    case Rel::Le: return "<=";
    case Rel::Ge: return ">=";
    case Rel::Eq: return "=";
  }
  return "?";
}

void validate(const HPolytope& P) {
  if (P.dim < 1) throw ContractError("HPolytope: dimension must be positive");
  for (const LinearRow& row : P.rows) {
    if (row.coeffs.size() != P.dim) {
      throw ContractError("HPolytope: row coefficient length != dim");
    }
  }
}

void validate(const VPolytope& Q) {
  if (Q.dim < 1) throw ContractError("VPolytope: dimension must be positive");
  for (const RatVector& v : Q.vertices) {
    if (v.size() != Q.dim) {
      throw ContractError("VPolytope: vertex length != dim");
    }
  }
}

Rat eval_row(const LinearRow& row, const RatVector& x) {
  Rat acc = 0;
  for (Eigen::Index i = 0; i < row.coeffs.size(); ++i) {
    if (row.coeffs(i) != 0) acc += row.coeffs(i) * x(i);
  }
  return acc;
}

bool row_satisfied(const LinearRow& row, const RatVector& x) {
  const Rat lhs = eval_row(row, x);
  switch (row.rel) {
    case Rel::Le: return lhs <= row.rhs;
    case Rel::Ge: return lhs >= row.rhs;
    case Rel::Eq: return lhs == row.rhs;
  }
  return false;
}

bool hrep_contains(const HPolytope& P, const RatVector& x) {
  if (x.size() != P.dim) {
    throw ContractError("hrep_contains: point dimension != polytope dimension");
  }
  for (const LinearRow& row : P.rows) {
    if (!row_satisfied(row, x)) return false;
  }
  return true;
}

HPolytope make_empty_hpolytope(int dim) {
  HPolytope P;
  P.dim = dim;
  LinearRow row;
  row.coeffs = RatVector::Zero(dim);
  row.rel = Rel::Le;
  row.rhs = -1;
  P.rows.push_back(std::move(row));
  return P;
}

HPolytope unit_box(int n) {
  HPolytope P;
  P.dim = n;
  for (int i = 0; i < n; ++i) {
    LinearRow lo;
    lo.coeffs = RatVector::Zero(n);
    lo.coeffs(i) = 1;
    lo.rel = Rel::Ge;
    lo.rhs = 0;
    P.rows.push_back(std::move(lo));
    LinearRow hi;
    hi.coeffs = RatVector::Zero(n);
    hi.coeffs(i) = 1;
    hi.rel = Rel::Le;
    hi.rhs = 1;
    P.rows.push_back(std::move(hi));
  }
  canonicalize_rows(&P);
  return P;
}

LinearRow normalize_row(const LinearRow& row) {
  LinearRow out = row;
  // Common positive scale: LCM of denominators over coeffs and rhs.
  mpz_class lcm = 1;
  auto fold_lcm = [&lcm](const Rat& v) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    lcm = l;
  };
  for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) fold_lcm(out.coeffs(i));
  fold_lcm(out.rhs);
  const Rat scale_up(lcm);
  for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) out.coeffs(i) *= scale_up;
  out.rhs *= scale_up;

  // Divide by the GCD of all (now integer) entries.
  mpz_class gcd = 0;
  auto fold_gcd = [&gcd](const Rat& v) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gcd.get_mpz_t(), v.get_num().get_mpz_t());
    gcd = g;
  };
  for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) fold_gcd(out.coeffs(i));
  fold_gcd(out.rhs);
  if (gcd > 1) {
    const Rat scale_down(gcd);
    for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) {
      out.coeffs(i) /= scale_down;
    }
    out.rhs /= scale_down;
  }

  // Equality rows carry no orientation: make the first nonzero coefficient
  // positive (falling back to the rhs for all-zero coefficient rows).
  if (out.rel == Rel::Eq) {
    int sign = 0;
    for (Eigen::Index i = 0; i < out.coeffs.size() && sign == 0; ++i) {
      sign = sgn(out.coeffs(i));
    }
    if (sign == 0) sign = sgn(out.rhs);
    if (sign < 0) {
      for (Eigen::Index i = 0; i < out.coeffs.size(); ++i) {
        out.coeffs(i) = -out.coeffs(i);
      }
      out.rhs = -out.rhs;
    }
  }
  return out;
}

namespace {

int count_nonzeros(const RatVector& v) {
  int n = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) ++n;
  }
  return n;
}

int rel_order(Rel r) {
  switch (r) {
    case Rel::Le: return 0;
    case Rel::Ge: return 1;
    case Rel::Eq: return 2;
  }
  return 3;
}

}  // namespace

bool row_less(const LinearRow& a, const LinearRow& b) {
  const int na = count_nonzeros(a.coeffs);
  const int nb = count_nonzeros(b.coeffs);
  if (na != nb) return na < nb;
  const int c = lex_compare(a.coeffs, b.coeffs);
  if (c != 0) return c < 0;
  if (a.rel != b.rel) return rel_order(a.rel) < rel_order(b.rel);
  return cmp(a.rhs, b.rhs) < 0;
}

bool row_equal(const LinearRow& a, const LinearRow& b) {
  return a.rel == b.rel && cmp(a.rhs, b.rhs) == 0 &&
         lex_compare(a.coeffs, b.coeffs) == 0;
}

void canonicalize_rows(HPolytope* P) {
  for (LinearRow& row : P->rows) row = normalize_row(row);
  std::sort(P->rows.begin(), P->rows.end(), row_less);
  P->rows.erase(std::unique(P->rows.begin(), P->rows.end(), row_equal),
                P->rows.end());
}

void canonicalize_vertices(VPolytope* Q) {
  std::sort(Q->vertices.begin(), Q->vertices.end(), lex_less);
  Q->vertices.erase(
      std::unique(Q->vertices.begin(), Q->vertices.end(),
                  [](const RatVector& a, const RatVector& b) {
                    return lex_compare(a, b) == 0;
                  }),
      Q->vertices.end());
}

bool same_vertex_set(const VPolytope& a, const VPolytope& b) {
  if (a.dim != b.dim || a.vertices.size() != b.vertices.size()) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    if (lex_compare(a.vertices[i], b.vertices[i]) != 0) return false;
  }
  return true;
}

}  // namespace cutrank
