#include "conelab/lp.hpp"

#include <cstdint>

namespace conelab {

void LinearProgram::add(RatVector coeffs, Sense sense, Rational rhs) {
  if (coeffs.size() != num_vars) throw DimensionError("constraint length does not match variable count");
  constraints.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, cols + 1), basis_(rows), obj_(cols + 1) {}

  std::size_t rows() const { return t_.rows(); }
  std::size_t cols() const { return t_.cols() - 1; }
  Rational& at(std::size_t i, std::size_t j) { return t_(i, j); }
  Rational& rhs(std::size_t i) { return t_(i, cols()); }
  std::vector<std::size_t>& basis() { return basis_; }

  // Reduced costs for maximizing c over the current basis.
  void set_objective(const RatVector& c) {
    for (std::size_t j = 0; j <= cols(); ++j) obj_[j] = j < cols() ? c[j] : Rational(0);
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols(); ++j) obj_[j] -= cb * t_(i, j);
    }
  }

  Rational value() const { return -obj_[cols()]; }

  void pivot(std::size_t r, std::size_t s) {
    const Rational inv = 1 / t_(r, s);
    for (std::size_t j = 0; j <= cols(); ++j)
      if (sgn(t_(r, j)) != 0) t_(r, j) *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || sgn(t_(i, s)) == 0) continue;
      const Rational f = t_(i, s);
      for (std::size_t j = 0; j <= cols(); ++j)
        if (sgn(t_(r, j)) != 0) t_(i, j) -= f * t_(r, j);
    }
    if (sgn(obj_[s]) != 0) {
      const Rational f = obj_[s];
      for (std::size_t j = 0; j <= cols(); ++j)
        if (sgn(t_(r, j)) != 0) obj_[j] -= f * t_(r, j);
    }
    basis_[r] = s;
  }

  // Returns false when unbounded. Columns >= `allowed` never enter.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::size_t s = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (sgn(obj_[j]) > 0) {
          s = j;
          break;
        }
      if (s == allowed) return true;
      std::size_t r = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(t_(i, s)) <= 0) continue;
        Rational ratio = t_(i, cols()) / t_(i, s);
        if (r == rows() || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == rows()) return false;
      pivot(r, s);
    }
  }

  void drop_row(std::size_t r) {
    RatMatrix t(rows() - 1, cols() + 1);
    std::vector<std::size_t> b;
    for (std::size_t i = 0, k = 0; i < rows(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j <= cols(); ++j) t(k, j) = t_(i, j);
      b.push_back(basis_[i]);
      ++k;
    }
    t_ = std::move(t);
    basis_ = std::move(b);
  }

 private:
  RatMatrix t_;
  std::vector<std::size_t> basis_;
  RatVector obj_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  // Column layout: structural (free vars split in +/-), slacks, artificials.
  std::vector<std::size_t> pos_col(lp.num_vars), neg_col(lp.num_vars, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    pos_col[j] = ncols++;
    if (lp.free_var[j]) neg_col[j] = ncols++;
  }
  const std::size_t m = lp.constraints.size();
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.constraints[i].sense != Sense::Equal) slack_col[i] = ncols++;
  const std::size_t nreal = ncols;
  ncols += m;

  Tableau tab(m, ncols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    const int flip = sgn(c.rhs) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      if (sgn(c.coeffs[j]) == 0) continue;
      tab.at(i, pos_col[j]) = flip * c.coeffs[j];
      if (neg_col[j] != SIZE_MAX) tab.at(i, neg_col[j]) = -flip * c.coeffs[j];
    }
    if (c.sense == Sense::LessEqual) tab.at(i, slack_col[i]) = flip;
    if (c.sense == Sense::GreaterEqual) tab.at(i, slack_col[i]) = -flip;
    tab.rhs(i) = flip * c.rhs;
    tab.at(i, nreal + i) = 1;
    tab.basis()[i] = nreal + i;
  }

  RatVector phase1(ncols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[nreal + i] = -1;
  tab.set_objective(phase1);
  tab.optimize(ncols);
  LpResult result;
  if (sgn(tab.value()) < 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }

  // Drive artificials out of the basis; rows that cannot be pivoted are redundant.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < nreal) {
      ++i;
      continue;
    }
    std::size_t s = nreal;
    for (std::size_t j = 0; j < nreal; ++j)
      if (sgn(tab.at(i, j)) != 0) {
        s = j;
        break;
      }
    if (s == nreal) {
      tab.drop_row(i);
    } else {
      tab.pivot(i, s);
      ++i;
    }
  }

  RatVector phase2(ncols, Rational(0));
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    phase2[pos_col[j]] = lp.objective[j];
    if (neg_col[j] != SIZE_MAX) phase2[neg_col[j]] = -lp.objective[j];
  }
  tab.set_objective(phase2);
  if (!tab.optimize(nreal)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  RatVector y(ncols, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) y[tab.basis()[i]] = tab.rhs(i);
  result.status = LpStatus::Optimal;
  result.x.assign(lp.num_vars, Rational(0));
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    result.x[j] = y[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) result.x[j] -= y[neg_col[j]];
  }
  result.value = tab.value();
  return result;
}

}  // namespace conelab
