// Copyright 2026 The steiner_gap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bounded-variable revised simplex. One template serves both the exact
// rational solver, which keeps an explicit dense basis inverse, and the
// double-precision one, which keeps a sparse LU factorization with
// product-form updates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <type_traits>
#include <vector>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "steiner_gap/lp.hpp"

namespace steiner_gap {
namespace {

enum class State : uint8_t { Basic, AtLower, AtUpper, Free };

template <class T>
constexpr bool kExact = std::is_same_v<T, Rational>;

template <class T>
T convert(const Rational& r) {
  if constexpr (kExact<T>) {
    return r;
  } else {
    return r.to_double();
  }
}

template <class T>
using SparseColumn = std::vector<std::pair<int, T>>;

// Explicit dense row-major inverse, updated by elementary row operations.
template <class T>
class DenseInverse {
 public:
  void reset(int m) {
    m_ = m;
    binv_.assign(static_cast<size_t>(m) * static_cast<size_t>(m), T(0));
    for (int i = 0; i < m; ++i) at(i, i) = T(1);
  }
  void set_diagonal(int i, const T& v) { at(i, i) = v; }
  bool needs_refactor() const { return false; }
  void refactor(const std::vector<SparseColumn<T>>&) {}

  std::vector<T> ftran(const SparseColumn<T>& column) const {
    std::vector<T> alpha(static_cast<size_t>(m_), T(0));
    for (const auto& [k, a] : column) {
      for (int i = 0; i < m_; ++i) {
        const T& b = at(i, k);
        if (!is_zero(b)) alpha[static_cast<size_t>(i)] += b * a;
      }
    }
    return alpha;
  }
  std::vector<T> ftran_dense(const std::vector<T>& v) const {
    std::vector<T> out(static_cast<size_t>(m_), T(0));
    for (int i = 0; i < m_; ++i) {
      T acc(0);
      for (int k = 0; k < m_; ++k) {
        const T& b = at(i, k);
        if (!is_zero(b) && !is_zero(v[static_cast<size_t>(k)])) acc += b * v[static_cast<size_t>(k)];
      }
      out[static_cast<size_t>(i)] = acc;
    }
    return out;
  }
  // Row vector v^T B^{-1}.
  std::vector<T> btran_dense(const std::vector<T>& v) const {
    std::vector<T> out(static_cast<size_t>(m_), T(0));
    for (int i = 0; i < m_; ++i) {
      const T& c = v[static_cast<size_t>(i)];
      if (is_zero(c)) continue;
      for (int k = 0; k < m_; ++k) {
        const T& b = at(i, k);
        if (!is_zero(b)) out[static_cast<size_t>(k)] += c * b;
      }
    }
    return out;
  }
  std::vector<T> row(int r) const {
    return std::vector<T>(binv_.begin() + static_cast<std::ptrdiff_t>(r) * m_,
                          binv_.begin() + static_cast<std::ptrdiff_t>(r + 1) * m_);
  }
  size_t row_nnz(int i) const {
    size_t count = 0;
    for (int k = 0; k < m_; ++k) count += !is_zero(at(i, k));
    return count;
  }

  // Replaces the basic variable of row r given alpha = B^{-1} a_q.
  void update(int r, const std::vector<T>& alpha) {
    T pivot = alpha[static_cast<size_t>(r)];
    std::vector<int> nz;
    for (int k = 0; k < m_; ++k) {
      T& v = at(r, k);
      if (is_zero(v)) continue;
      v /= pivot;
      nz.push_back(k);
    }
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const T& f = alpha[static_cast<size_t>(i)];
      if (is_zero(f)) continue;
      for (int k : nz) {
        T& v = at(i, k);
        v -= f * at(r, k);
        if constexpr (!kExact<T>) {
          if (std::fabs(v) < 1e-14) v = 0.0;
        }
      }
    }
  }

 private:
  static bool is_zero(const T& v) {
    if constexpr (kExact<T>) {
      return v.is_zero();
    } else {
      return v == 0.0;
    }
  }
  T& at(int i, int k) { return binv_[static_cast<size_t>(i) * static_cast<size_t>(m_) + static_cast<size_t>(k)]; }
  const T& at(int i, int k) const {
    return binv_[static_cast<size_t>(i) * static_cast<size_t>(m_) + static_cast<size_t>(k)];
  }

  int m_ = 0;
  std::vector<T> binv_;
};

// B^{-1} = E_k ... E_1 B_0^{-1} with B_0 held as a sparse LU factorization
// and E_t the elementary matrices of the pivots since the last refactor.
class SparseLuBasis {
 public:
  static constexpr int kRefactorInterval = 64;

  void reset(int m) {
    m_ = m;
    diagonal_.assign(static_cast<size_t>(m), 1.0);
    identity_ = true;
    etas_.clear();
  }
  void set_diagonal(int i, double v) { diagonal_[static_cast<size_t>(i)] = v; }
  bool needs_refactor() const { return static_cast<int>(etas_.size()) >= kRefactorInterval; }

  void refactor(const std::vector<SparseColumn<double>>& columns) {
    std::vector<Eigen::Triplet<double>> triplets;
    for (size_t k = 0; k < columns.size(); ++k) {
      for (const auto& [i, a] : columns[k]) triplets.emplace_back(i, static_cast<int>(k), a);
    }
    matrix_.resize(m_, m_);
    matrix_.setFromTriplets(triplets.begin(), triplets.end());
    matrix_.makeCompressed();
    lu_.analyzePattern(matrix_);
    lu_.factorize(matrix_);
    if (lu_.info() != Eigen::Success) throw NumericalFailure("singular basis during refactorization");
    identity_ = false;
    etas_.clear();
  }

  std::vector<double> ftran(const SparseColumn<double>& column) const {
    std::vector<double> v(static_cast<size_t>(m_), 0.0);
    for (const auto& [i, a] : column) v[static_cast<size_t>(i)] += a;
    return ftran_dense(v);
  }
  std::vector<double> ftran_dense(const std::vector<double>& v) const {
    std::vector<double> x = base_solve(v, false);
    for (const Eta& e : etas_) {
      double xr = x[static_cast<size_t>(e.row)];
      if (xr == 0.0) continue;
      x[static_cast<size_t>(e.row)] = 0.0;
      for (const auto& [i, eta] : e.entries) x[static_cast<size_t>(i)] += eta * xr;
    }
    return x;
  }
  std::vector<double> btran_dense(const std::vector<double>& v) const {
    std::vector<double> y = v;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double acc = 0.0;
      for (const auto& [i, eta] : it->entries) acc += y[static_cast<size_t>(i)] * eta;
      y[static_cast<size_t>(it->row)] = acc;
    }
    return base_solve(y, true);
  }
  std::vector<double> row(int r) const {
    std::vector<double> unit(static_cast<size_t>(m_), 0.0);
    unit[static_cast<size_t>(r)] = 1.0;
    return btran_dense(unit);
  }
  size_t row_nnz(int) const { return 0; }

  void update(int r, const std::vector<double>& alpha) {
    Eta e;
    e.row = r;
    double pivot = alpha[static_cast<size_t>(r)];
    for (int i = 0; i < m_; ++i) {
      double a = alpha[static_cast<size_t>(i)];
      if (i == r) {
        e.entries.emplace_back(i, 1.0 / pivot);
      } else if (std::fabs(a) > 1e-14) {
        e.entries.emplace_back(i, -a / pivot);
      }
    }
    etas_.push_back(std::move(e));
  }

 private:
  struct Eta {
    int row = 0;
    std::vector<std::pair<int, double>> entries;  // includes the pivot row
  };

  std::vector<double> base_solve(const std::vector<double>& v, bool transpose) const {
    if (identity_) {
      std::vector<double> out(static_cast<size_t>(m_));
      for (int i = 0; i < m_; ++i) out[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] / diagonal_[static_cast<size_t>(i)];
      return out;
    }
    Eigen::Map<const Eigen::VectorXd> rhs(v.data(), m_);
    Eigen::VectorXd sol;
    if (transpose) {
      sol = lu_.transpose().solve(rhs);
    } else {
      sol = lu_.solve(rhs);
    }
    return std::vector<double>(sol.data(), sol.data() + m_);
  }

  int m_ = 0;
  bool identity_ = true;
  std::vector<double> diagonal_;
  Eigen::SparseMatrix<double> matrix_;
  // transpose() is non-const in Eigen.
  mutable Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu_;
  std::vector<Eta> etas_;
};

template <class T>
using BasisFactor = std::conditional_t<kExact<T>, DenseInverse<T>, SparseLuBasis>;

struct Tolerances {
  double primal = 1e-9;  // bound violation accepted as feasible
  double dual = 1e-9;    // reduced cost treated as zero
  double pivot = 1e-9;   // smallest usable pivot magnitude
};

struct BasisHint {
  std::vector<int> basic;      // structural or logical indices
  std::vector<State> state;    // per structural and logical variable
};

template <class T>
class RevisedSimplex {
 public:
  enum class Result { Optimal, Infeasible, Unbounded, IterationLimit };

  RevisedSimplex(const RationalLp& lp, const SolveOptions& options, Tolerances tol)
      : lp_(lp), options_(options), tol_(tol) {
    m_ = lp.num_constraints();
    n_ = lp.num_variables();
    columns_.resize(static_cast<size_t>(n_));
    for (int i = 0; i < m_; ++i) {
      for (const auto& t : lp.constraint(i).terms) {
        columns_[static_cast<size_t>(t.column)].push_back({i, convert<T>(t.coefficient)});
      }
    }
    rhs_.resize(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) rhs_[static_cast<size_t>(i)] = convert<T>(lp.constraint(i).rhs);
    for (int j = 0; j < n_; ++j) {
      const auto& v = lp.variable(j);
      add_bounds(v.lower ? std::optional<T>(convert<T>(*v.lower)) : std::nullopt,
                 v.upper ? std::optional<T>(convert<T>(*v.upper)) : std::nullopt);
    }
    for (int i = 0; i < m_; ++i) {
      // Logical s_i with a_i x + s_i = b_i.
      switch (lp.constraint(i).sense) {
        case Sense::LessEqual: add_bounds(T(0), std::nullopt); break;
        case Sense::GreaterEqual: add_bounds(std::nullopt, T(0)); break;
        case Sense::Equal: add_bounds(T(0), T(0)); break;
      }
    }
    art_row_.assign(static_cast<size_t>(n_ + m_), -1);
    art_sign_.assign(static_cast<size_t>(n_ + m_), 0);
  }

  int iterations() const { return iterations_; }

  // Slack basis plus artificials where the slack alone is infeasible, then
  // phase one. Returns false if the LP is infeasible.
  Result cold_start() {
    int total = n_ + m_;
    state_.assign(static_cast<size_t>(total), State::AtLower);
    x_.assign(static_cast<size_t>(total), T(0));
    for (int j = 0; j < n_; ++j) place_at_natural_bound(j);
    std::vector<T> residual = rhs_;
    for (int j = 0; j < n_; ++j) {
      if (is_zero_value(x_[static_cast<size_t>(j)])) continue;
      for (const auto& [row, a] : columns_[static_cast<size_t>(j)]) residual[static_cast<size_t>(row)] -= a * x_[static_cast<size_t>(j)];
    }
    head_.assign(static_cast<size_t>(m_), -1);
    basis_.reset(m_);
    bool need_phase_one = false;
    for (int i = 0; i < m_; ++i) {
      int s = n_ + i;
      const T& r = residual[static_cast<size_t>(i)];
      bool below = has_lower(s) && r < lower(s) - feas_slack();
      bool above = has_upper(s) && r > upper(s) + feas_slack();
      if (!below && !above) {
        make_basic(s, i);
        x_[static_cast<size_t>(s)] = r;
        continue;
      }
      T clamp = below ? lower(s) : upper(s);
      state_[static_cast<size_t>(s)] = below ? State::AtLower : State::AtUpper;
      if (has_lower(s) && has_upper(s) && lower(s) == upper(s)) state_[static_cast<size_t>(s)] = State::AtLower;
      x_[static_cast<size_t>(s)] = clamp;
      int sign = r > clamp ? 1 : -1;
      int a = add_artificial(i, sign);
      make_basic(a, i);
      x_[static_cast<size_t>(a)] = sign > 0 ? T(r - clamp) : T(clamp - r);
      basis_.set_diagonal(i, T(sign));
      need_phase_one = true;
    }
    if (!need_phase_one) return Result::Optimal;
    cost_.assign(state_.size(), T(0));
    for (size_t k = static_cast<size_t>(n_ + m_); k < state_.size(); ++k) cost_[k] = T(1);
    recompute_duals();
    Result r = iterate();
    if (r != Result::Optimal) return r;
    T infeasibility(0);
    for (size_t k = static_cast<size_t>(n_ + m_); k < state_.size(); ++k) infeasibility += x_[k];
    phase_one_duals_ = y_;
    if (positive(infeasibility, tol_.primal)) return Result::Infeasible;
    // Artificials may never grow again; basic ones sit at zero in redundant
    // rows and leave on the first pivot that touches them.
    for (size_t k = static_cast<size_t>(n_ + m_); k < state_.size(); ++k) {
      up_[k] = T(0);
      has_up_[k] = 1;
      if (state_[k] != State::Basic) state_[k] = State::AtLower;
      if constexpr (!kExact<T>) {
        if (state_[k] == State::Basic) x_[k] = std::min(x_[k], 0.0);
      }
    }
    return Result::Optimal;
  }

  // Installs a basis by pivoting the hinted columns into a slack basis.
  // Returns false if the resulting basic solution is not primal feasible.
  bool warm_start(const BasisHint& hint) {
    int total = n_ + m_;
    state_.assign(static_cast<size_t>(total), State::AtLower);
    x_.assign(static_cast<size_t>(total), T(0));
    head_.assign(static_cast<size_t>(m_), -1);
    basis_.reset(m_);
    for (int i = 0; i < m_; ++i) make_basic(n_ + i, i);
    std::vector<char> target(static_cast<size_t>(total), 0);
    for (int v : hint.basic) target[static_cast<size_t>(v)] = 1;
    for (int v : hint.basic) {
      if (v >= n_) continue;
      std::vector<T> alpha = ftran(v);
      int best = -1;
      size_t best_nnz = 0;
      double best_mag = 0.0;
      for (int i = 0; i < m_; ++i) {
        int h = head_[static_cast<size_t>(i)];
        if (h < n_ || target[static_cast<size_t>(h)]) continue;
        const T& a = alpha[static_cast<size_t>(i)];
        if (!nonzero_pivot(a)) continue;
        if constexpr (kExact<T>) {
          size_t nnz = basis_.row_nnz(i);
          if (best < 0 || nnz < best_nnz) {
            best = i;
            best_nnz = nnz;
          }
        } else {
          if (best < 0 || std::fabs(a) > best_mag) {
            best = i;
            best_mag = std::fabs(a);
          }
        }
      }
      if (best < 0) continue;
      int leaving = head_[static_cast<size_t>(best)];
      state_[static_cast<size_t>(leaving)] = State::AtLower;
      pos_[static_cast<size_t>(leaving)] = -1;
      make_basic(v, best);
      update_basis(best, alpha);
    }
    for (int j = 0; j < total; ++j) {
      if (state_[static_cast<size_t>(j)] == State::Basic) continue;
      State s = j < static_cast<int>(hint.state.size()) ? hint.state[static_cast<size_t>(j)] : State::AtLower;
      if (s == State::Basic) s = State::AtLower;
      place_nonbasic(j, s);
    }
    recompute_primal();
    for (int i = 0; i < m_; ++i) {
      int h = head_[static_cast<size_t>(i)];
      const T& v = x_[static_cast<size_t>(h)];
      if (has_lower(h) && v < lower(h) - feas_slack()) return false;
      if (has_upper(h) && v > upper(h) + feas_slack()) return false;
    }
    return true;
  }

  Result optimize() {
    cost_.assign(state_.size(), T(0));
    for (int j = 0; j < n_; ++j) cost_[static_cast<size_t>(j)] = convert<T>(lp_.objective()[static_cast<size_t>(j)]);
    recompute_duals();
    return iterate();
  }

  // Recomputes basic values and duals from the current inverse; the double
  // solver calls this to shed accumulated drift.
  void refresh() {
    recompute_primal();
    recompute_duals();
  }

  // Rebuilds the inverse from scratch for the current basis.
  void reinvert() {
    BasisHint hint = basis();
    std::vector<T> saved_cost = cost_;
    // A slightly infeasible rebuilt basis is kept; iterate() copes with it.
    (void)warm_start(hint);
    cost_ = saved_cost;
    cost_.resize(state_.size(), T(0));
    recompute_duals();
  }

  // Widens each finite bound of the structural and logical variables by a
  // random amount in [scale, 2 scale] * (1 + |bound|).
  void perturb_bounds(double scale) {
    if constexpr (!kExact<T>) {
      original_lo_ = lo_;
      original_up_ = up_;
      perturbed_ = true;
      std::mt19937_64 rng(0x5eed);
      std::uniform_real_distribution<double> unit(1.0, 2.0);
      for (int j = 0; j < n_ + m_; ++j) {
        if (has_lower(j)) lo_[static_cast<size_t>(j)] -= scale * unit(rng) * (1.0 + std::fabs(lower(j)));
        if (has_upper(j)) up_[static_cast<size_t>(j)] += scale * unit(rng) * (1.0 + std::fabs(upper(j)));
      }
    }
  }

  // Restores the original bounds, moves nonbasic variables onto them and
  // removes the resulting primal infeasibility with dual simplex pivots.
  // Call only at a dual feasible basis.
  Result restore_bounds() {
    if constexpr (!kExact<T>) {
      if (!perturbed_) return Result::Optimal;
      perturbed_ = false;
      const size_t keep = static_cast<size_t>(n_ + m_);
      std::copy(original_lo_.begin(), original_lo_.begin() + static_cast<std::ptrdiff_t>(keep), lo_.begin());
      std::copy(original_up_.begin(), original_up_.begin() + static_cast<std::ptrdiff_t>(keep), up_.begin());
      for (size_t j = 0; j < state_.size(); ++j) {
        if (state_[j] != State::Basic) place_nonbasic(static_cast<int>(j), state_[j]);
      }
      recompute_primal();
      recompute_duals();
      Result r = dual_cleanup();
      if (r != Result::Optimal) return r;
      return iterate();
    }
    return Result::Optimal;
  }

  BasisHint basis() const {
    BasisHint hint;
    for (int i = 0; i < m_; ++i) {
      int h = head_[static_cast<size_t>(i)];
      if (h < n_ + m_) hint.basic.push_back(h);
    }
    hint.state.assign(state_.begin(), state_.begin() + (n_ + m_));
    return hint;
  }

  std::vector<T> values() const {
    return std::vector<T>(x_.begin(), x_.begin() + n_);
  }
  const std::vector<T>& duals() const { return y_; }
  const std::vector<T>& phase_one_duals() const { return phase_one_duals_; }
  const std::vector<T>& ray() const { return ray_; }

 private:
  void add_bounds(std::optional<T> lo, std::optional<T> up) {
    has_lo_.push_back(lo.has_value());
    lo_.push_back(lo ? *lo : T(0));
    has_up_.push_back(up.has_value());
    up_.push_back(up ? *up : T(0));
    pos_.push_back(-1);
  }

  int add_artificial(int row, int sign) {
    add_bounds(T(0), std::nullopt);
    art_row_.push_back(row);
    art_sign_.push_back(sign);
    state_.push_back(State::AtLower);
    x_.push_back(T(0));
    return static_cast<int>(state_.size()) - 1;
  }

  bool has_lower(int j) const { return has_lo_[static_cast<size_t>(j)]; }
  bool has_upper(int j) const { return has_up_[static_cast<size_t>(j)]; }
  const T& lower(int j) const { return lo_[static_cast<size_t>(j)]; }
  const T& upper(int j) const { return up_[static_cast<size_t>(j)]; }
  bool is_fixed(int j) const { return has_lower(j) && has_upper(j) && lower(j) == upper(j); }

  T feas_slack() const {
    if constexpr (kExact<T>) {
      return T(0);
    } else {
      return tol_.primal;
    }
  }
  static bool is_zero_value(const T& v) {
    if constexpr (kExact<T>) {
      return v.is_zero();
    } else {
      return v == 0.0;
    }
  }
  static bool positive(const T& v, double tol) {
    if constexpr (kExact<T>) {
      (void)tol;
      return v.sign() > 0;
    } else {
      return v > tol;
    }
  }
  static bool negative(const T& v, double tol) {
    if constexpr (kExact<T>) {
      (void)tol;
      return v.sign() < 0;
    } else {
      return v < -tol;
    }
  }
  bool nonzero_pivot(const T& v) const {
    if constexpr (kExact<T>) {
      return !v.is_zero();
    } else {
      return std::fabs(v) > tol_.pivot;
    }
  }
  static double magnitude(const T& v) {
    if constexpr (kExact<T>) {
      return std::fabs(v.to_double());
    } else {
      return std::fabs(v);
    }
  }

  void make_basic(int var, int row) {
    head_[static_cast<size_t>(row)] = var;
    state_[static_cast<size_t>(var)] = State::Basic;
    pos_[static_cast<size_t>(var)] = row;
  }

  void place_at_natural_bound(int j) {
    if (has_lower(j)) {
      place_nonbasic(j, State::AtLower);
    } else if (has_upper(j)) {
      place_nonbasic(j, State::AtUpper);
    } else {
      place_nonbasic(j, State::Free);
    }
  }

  void place_nonbasic(int j, State s) {
    if (s == State::AtLower && !has_lower(j)) s = has_upper(j) ? State::AtUpper : State::Free;
    if (s == State::AtUpper && !has_upper(j)) s = has_lower(j) ? State::AtLower : State::Free;
    if (s == State::Free && has_lower(j)) s = State::AtLower;
    if (s == State::Free && has_upper(j)) s = State::AtUpper;
    state_[static_cast<size_t>(j)] = s;
    pos_[static_cast<size_t>(j)] = -1;
    x_[static_cast<size_t>(j)] = s == State::AtLower ? lower(j) : s == State::AtUpper ? upper(j) : T(0);
  }

  // Visits the nonzeros of column j of [A | I | artificials].
  template <class F>
  void for_column(int j, F&& f) const {
    if (j < n_) {
      for (const auto& [row, a] : columns_[static_cast<size_t>(j)]) f(row, a);
    } else if (j < n_ + m_) {
      f(j - n_, T(1));
    } else {
      f(art_row_[static_cast<size_t>(j)], T(art_sign_[static_cast<size_t>(j)]));
    }
  }

  SparseColumn<T> column(int j) const {
    SparseColumn<T> col;
    for_column(j, [&](int row, const T& a) { col.push_back({row, a}); });
    return col;
  }

  std::vector<T> ftran(int j) const { return basis_.ftran(column(j)); }

  // Call after make_basic so that head_ already names the entering column.
  void update_basis(int r, const std::vector<T>& alpha) {
    basis_.update(r, alpha);
    if (basis_.needs_refactor()) {
      std::vector<SparseColumn<T>> columns;
      columns.reserve(static_cast<size_t>(m_));
      for (int i = 0; i < m_; ++i) columns.push_back(column(head_[static_cast<size_t>(i)]));
      basis_.refactor(columns);
    }
  }

  void recompute_primal() {
    std::vector<T> residual = rhs_;
    for (size_t j = 0; j < state_.size(); ++j) {
      if (state_[j] == State::Basic || is_zero_value(x_[j])) continue;
      for_column(static_cast<int>(j), [&](int row, const T& a) { residual[static_cast<size_t>(row)] -= a * x_[j]; });
    }
    std::vector<T> xb = basis_.ftran_dense(residual);
    for (int i = 0; i < m_; ++i) x_[static_cast<size_t>(head_[static_cast<size_t>(i)])] = xb[static_cast<size_t>(i)];
  }

  void recompute_duals() {
    std::vector<T> cb(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) cb[static_cast<size_t>(i)] = cost_[static_cast<size_t>(head_[static_cast<size_t>(i)])];
    y_ = basis_.btran_dense(cb);
  }

  T reduced_cost(int j) const {
    T d = cost_[static_cast<size_t>(j)];
    for_column(j, [&](int row, const T& a) {
      const T& yi = y_[static_cast<size_t>(row)];
      if (!is_zero_value(yi)) d -= yi * a;
    });
    return d;
  }

  // Direction in which x_j may move profitably, or 0.
  int improving_direction(int j, const T& d) const {
    State s = state_[static_cast<size_t>(j)];
    if (s == State::Basic || is_fixed(j)) return 0;
    if ((s == State::AtLower || s == State::Free) && negative(d, tol_.dual)) return 1;
    if ((s == State::AtUpper || s == State::Free) && positive(d, tol_.dual)) return -1;
    return 0;
  }

  void check_deadline() const {
    if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) {
      throw SolveTimeout("solve exceeded its time limit");
    }
  }

  // Bounded dual simplex: repeatedly removes the largest bound violation of
  // a basic variable while keeping the reduced costs dual feasible.
  Result dual_cleanup() {
    const int total = static_cast<int>(state_.size());
    while (true) {
      if (iterations_ >= options_.max_iterations) return Result::IterationLimit;
      check_deadline();
      int r = -1;
      double worst = tol_.primal;
      bool to_lower = false;
      for (int i = 0; i < m_; ++i) {
        int h = head_[static_cast<size_t>(i)];
        double v = magnitude_signed(x_[static_cast<size_t>(h)]);
        if (has_lower(h) && magnitude_signed(lower(h)) - v > worst) {
          worst = magnitude_signed(lower(h)) - v;
          r = i;
          to_lower = true;
        }
        if (has_upper(h) && v - magnitude_signed(upper(h)) > worst) {
          worst = v - magnitude_signed(upper(h));
          r = i;
          to_lower = false;
        }
      }
      if (r < 0) return Result::Optimal;
      std::vector<T> rho = basis_.row(r);
      // x_r changes by -alpha_j * t when nonbasic x_j moves by t.
      int entering = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      double best_alpha = 0.0;
      for (int j = 0; j < total; ++j) {
        State s = state_[static_cast<size_t>(j)];
        if (s == State::Basic || is_fixed(j)) continue;
        double alpha = 0.0;
        for_column(j, [&](int row, const T& a) { alpha += magnitude_signed(rho[static_cast<size_t>(row)]) * magnitude_signed(a); });
        if (std::fabs(alpha) <= tol_.pivot) continue;
        // Required sign of the move of x_j so that x_r heads to its bound.
        double needed = to_lower ? -alpha : alpha;  // move direction sign must match
        bool up_ok = (s == State::AtLower || s == State::Free) && needed > 0;
        bool down_ok = (s == State::AtUpper || s == State::Free) && needed < 0;
        if (!up_ok && !down_ok) continue;
        double d = std::fabs(magnitude_signed(reduced_cost(j)));
        double ratio = d / std::fabs(alpha);
        if (ratio < best_ratio - 1e-12 || (ratio <= best_ratio + 1e-12 && std::fabs(alpha) > best_alpha)) {
          best_ratio = ratio;
          best_alpha = std::fabs(alpha);
          entering = j;
        }
      }
      if (entering < 0) return Result::Infeasible;
      std::vector<T> alpha = ftran(entering);
      int leaving = head_[static_cast<size_t>(r)];
      T target = to_lower ? lower(leaving) : upper(leaving);
      T theta = (x_[static_cast<size_t>(leaving)] - target) / alpha[static_cast<size_t>(r)];
      for (int i = 0; i < m_; ++i) {
        const T& a = alpha[static_cast<size_t>(i)];
        if (!is_zero_value(a)) x_[static_cast<size_t>(head_[static_cast<size_t>(i)])] -= theta * a;
      }
      T entering_value = x_[static_cast<size_t>(entering)] + theta;
      place_nonbasic(leaving, to_lower ? State::AtLower : State::AtUpper);
      make_basic(entering, r);
      update_basis(r, alpha);
      x_[static_cast<size_t>(entering)] = entering_value;
      recompute_duals();
      ++iterations_;
    }
  }

  static double magnitude_signed(const T& v) {
    if constexpr (kExact<T>) {
      return v.to_double();
    } else {
      return v;
    }
  }

  Result iterate() {
    int degenerate_run = 0;
    bool smallest_index = false;
    const int total = static_cast<int>(state_.size());
    while (true) {
      if (iterations_ >= options_.max_iterations) return Result::IterationLimit;
      check_deadline();
      if constexpr (!kExact<T>) {
        if (iterations_ > 0 && iterations_ % 100 == 0) refresh();
      }
      // Pricing.
      int entering = -1;
      int direction = 0;
      T entering_d(0);
      double best = 0.0;
      for (int j = 0; j < total; ++j) {
        if (state_[static_cast<size_t>(j)] == State::Basic) continue;
        if (is_fixed(j)) continue;
        T d = reduced_cost(j);
        int dir = improving_direction(j, d);
        if (dir == 0) continue;
        if (smallest_index) {
          entering = j;
          direction = dir;
          entering_d = d;
          break;
        }
        double mag = magnitude(d);
        if (entering < 0 || mag > best) {
          entering = j;
          direction = dir;
          entering_d = d;
          best = mag;
        }
      }
      if (entering < 0) return Result::Optimal;

      std::vector<T> alpha = ftran(entering);
      // Ratio test. Basic x_i changes by -theta * direction * alpha_i.
      int leave_row = -1;
      T theta(0);
      bool have_theta = false;
      bool leave_to_upper = false;
      if constexpr (kExact<T>) {
        for (int i = 0; i < m_; ++i) {
          const T& a = alpha[static_cast<size_t>(i)];
          if (a.is_zero()) continue;
          int h = head_[static_cast<size_t>(i)];
          T delta = direction > 0 ? a : -a;
          T limit;
          bool to_upper;
          if (delta.sign() > 0) {
            if (!has_lower(h)) continue;
            limit = (x_[static_cast<size_t>(h)] - lower(h)) / delta;
            to_upper = false;
          } else {
            if (!has_upper(h)) continue;
            limit = (upper(h) - x_[static_cast<size_t>(h)]) / (-delta);
            to_upper = true;
          }
          bool better = !have_theta || limit < theta ||
                        (limit == theta && h < head_[static_cast<size_t>(leave_row)]);
          if (better) {
            theta = limit;
            leave_row = i;
            leave_to_upper = to_upper;
            have_theta = true;
          }
        }
      } else {
        // Two-pass ratio test with relaxed bounds, then the largest pivot
        // among candidates within the relaxed step.
        double relaxed = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m_; ++i) {
          double a = alpha[static_cast<size_t>(i)];
          if (std::fabs(a) <= tol_.pivot) continue;
          int h = head_[static_cast<size_t>(i)];
          double delta = direction > 0 ? a : -a;
          double xv = x_[static_cast<size_t>(h)];
          if (delta > 0 && has_lower(h)) {
            relaxed = std::min(relaxed, (xv - lower(h) + tol_.primal) / delta);
          } else if (delta < 0 && has_upper(h)) {
            relaxed = std::min(relaxed, (upper(h) - xv + tol_.primal) / (-delta));
          }
        }
        double best_pivot = 0.0;
        for (int i = 0; i < m_; ++i) {
          double a = alpha[static_cast<size_t>(i)];
          if (std::fabs(a) <= tol_.pivot) continue;
          int h = head_[static_cast<size_t>(i)];
          double delta = direction > 0 ? a : -a;
          double xv = x_[static_cast<size_t>(h)];
          double limit;
          bool to_upper;
          if (delta > 0 && has_lower(h)) {
            limit = (xv - lower(h)) / delta;
            to_upper = false;
          } else if (delta < 0 && has_upper(h)) {
            limit = (upper(h) - xv) / (-delta);
            to_upper = true;
          } else {
            continue;
          }
          if (limit > relaxed) continue;
          bool better = std::fabs(a) > best_pivot ||
                        (smallest_index && std::fabs(a) == best_pivot && h < head_[static_cast<size_t>(leave_row)]);
          if (better) {
            best_pivot = std::fabs(a);
            theta = std::max(limit, 0.0);
            leave_row = i;
            leave_to_upper = to_upper;
            have_theta = true;
          }
        }
      }

      bool can_flip = has_lower(entering) && has_upper(entering);
      T flip_length = can_flip ? T(upper(entering) - lower(entering)) : T(0);
      if (!have_theta && !can_flip) {
        ray_.assign(static_cast<size_t>(n_), T(0));
        if (entering < n_) ray_[static_cast<size_t>(entering)] = T(direction);
        for (int i = 0; i < m_; ++i) {
          int h = head_[static_cast<size_t>(i)];
          if (h < n_) ray_[static_cast<size_t>(h)] = direction > 0 ? T(-alpha[static_cast<size_t>(i)]) : alpha[static_cast<size_t>(i)];
        }
        return Result::Unbounded;
      }
      ++iterations_;
      bool flip = can_flip && (!have_theta || !(theta < flip_length));
      T step = flip ? flip_length : theta;
      if (!is_zero_value(step)) {
        for (int i = 0; i < m_; ++i) {
          const T& a = alpha[static_cast<size_t>(i)];
          if (is_zero_value(a)) continue;
          int h = head_[static_cast<size_t>(i)];
          if (direction > 0) {
            x_[static_cast<size_t>(h)] -= step * a;
          } else {
            x_[static_cast<size_t>(h)] += step * a;
          }
        }
      }
      if (flip) {
        place_nonbasic(entering, state_[static_cast<size_t>(entering)] == State::AtLower ? State::AtUpper : State::AtLower);
      } else {
        int leaving = head_[static_cast<size_t>(leave_row)];
        T entering_value = x_[static_cast<size_t>(entering)];
        if (direction > 0) {
          entering_value += step;
        } else {
          entering_value -= step;
        }
        place_nonbasic(leaving, leave_to_upper ? State::AtUpper : State::AtLower);
        make_basic(entering, leave_row);
        update_basis(leave_row, alpha);
        x_[static_cast<size_t>(entering)] = entering_value;
        // y += d_q * (new row r of B^{-1}).
        std::vector<T> new_row = basis_.row(leave_row);
        for (int k = 0; k < m_; ++k) {
          const T& b = new_row[static_cast<size_t>(k)];
          if (!is_zero_value(b)) y_[static_cast<size_t>(k)] += entering_d * b;
        }
      }
      bool degenerate;
      if constexpr (kExact<T>) {
        degenerate = step.is_zero();
      } else {
        degenerate = step <= 1e-12;
      }
      if (degenerate) {
        if (++degenerate_run >= options_.degenerate_switch) smallest_index = true;
      } else {
        degenerate_run = 0;
        smallest_index = false;
      }
    }
  }

  const RationalLp& lp_;
  SolveOptions options_;
  Tolerances tol_;
  int m_ = 0;
  int n_ = 0;
  std::vector<std::vector<std::pair<int, T>>> columns_;
  std::vector<T> rhs_;
  std::vector<char> has_lo_, has_up_;
  std::vector<T> lo_, up_;
  std::vector<int> art_row_;
  std::vector<int> art_sign_;
  std::vector<State> state_;
  std::vector<T> x_;
  std::vector<int> pos_;
  std::vector<int> head_;
  BasisFactor<T> basis_;
  std::vector<T> cost_;
  std::vector<T> y_;
  std::vector<T> phase_one_duals_;
  std::vector<T> ray_;
  std::vector<T> original_lo_, original_up_;
  bool perturbed_ = false;
  int iterations_ = 0;
};

LpOutcome finish_exact(const RationalLp& lp, RevisedSimplex<Rational>& solver,
                       RevisedSimplex<Rational>::Result result) {
  using Result = RevisedSimplex<Rational>::Result;
  LpOutcome out;
  out.iterations = solver.iterations();
  switch (result) {
    case Result::Optimal:
      out.status = LpStatus::Optimal;
      out.values = solver.values();
      out.duals = solver.duals();
      out.objective = lp.objective_value(out.values);
      break;
    case Result::Unbounded:
      out.status = LpStatus::Unbounded;
      out.values = solver.values();
      out.ray = solver.ray();
      out.objective = lp.objective_value(out.values);
      break;
    case Result::Infeasible:
      out.status = LpStatus::Infeasible;
      out.farkas = solver.phase_one_duals();
      break;
    case Result::IterationLimit:
      throw NumericalFailure("exact simplex hit the iteration limit");
  }
  return out;
}

}  // namespace

LpOutcome solve_exact(const RationalLp& lp, const SolveOptions& options) {
  using Result = RevisedSimplex<Rational>::Result;
  if (options.float_warm_start) {
    std::optional<BasisHint> hint;
    try {
      RevisedSimplex<double> approx(lp, options, Tolerances{});
      if (options.perturbation > 0) approx.perturb_bounds(options.perturbation);
      auto r = approx.cold_start();
      if (r == RevisedSimplex<double>::Result::Optimal) r = approx.optimize();
      if (r == RevisedSimplex<double>::Result::Optimal) r = approx.restore_bounds();
      if (r == RevisedSimplex<double>::Result::Optimal) hint = approx.basis();
    } catch (const std::exception&) {
      hint.reset();
    }
    if (hint) {
      RevisedSimplex<Rational> exact(lp, options, Tolerances{});
      if (exact.warm_start(*hint)) {
        LpOutcome out = finish_exact(lp, exact, exact.optimize());
        out.warm_started = true;
        return out;
      }
    }
  }
  RevisedSimplex<Rational> exact(lp, options, Tolerances{});
  Result r = exact.cold_start();
  if (r != Result::Optimal) return finish_exact(lp, exact, r);
  return finish_exact(lp, exact, exact.optimize());
}

FloatOutcome solve_float(const RationalLp& lp, double tolerance, const SolveOptions& options) {
  if (!(tolerance > 0)) throw LpError("solve_float: tolerance must be positive");
  using Result = RevisedSimplex<double>::Result;
  Tolerances tol;
  tol.primal = std::min(1e-9, tolerance * 1e-2);
  tol.dual = std::min(1e-9, tolerance * 1e-2);
  RevisedSimplex<double> solver(lp, options, tol);
  if (options.perturbation > 0) solver.perturb_bounds(options.perturbation);
  Result r = solver.cold_start();
  FloatOutcome out;
  if (r == Result::Infeasible) {
    out.status = LpStatus::Infeasible;
    out.iterations = solver.iterations();
    return out;
  }
  if (r == Result::IterationLimit) throw NumericalFailure("float simplex hit the iteration limit");

  const int m = lp.num_constraints();
  const int n = lp.num_variables();
  std::vector<double> c(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) c[static_cast<size_t>(j)] = lp.objective()[static_cast<size_t>(j)].to_double();

  for (int attempt = 0; attempt < 3; ++attempt) {
    r = solver.optimize();
    if (r == Result::Optimal) r = solver.restore_bounds();
    if (r == Result::Infeasible) {
      out.status = LpStatus::Infeasible;
      out.iterations = solver.iterations();
      return out;
    }
    if (r == Result::Unbounded) {
      out.status = LpStatus::Unbounded;
      out.values = solver.values();
      out.iterations = solver.iterations();
      return out;
    }
    if (r == Result::IterationLimit) throw NumericalFailure("float simplex hit the iteration limit");
    solver.refresh();
    out.status = LpStatus::Optimal;
    out.values = solver.values();
    out.duals = solver.duals();
    out.iterations = solver.iterations();
    // Residual check against the original data.
    double violation = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto& v = lp.variable(j);
      double xj = out.values[static_cast<size_t>(j)];
      if (v.lower) violation = std::max(violation, v.lower->to_double() - xj);
      if (v.upper) violation = std::max(violation, xj - v.upper->to_double());
    }
    double dual_objective = 0.0;
    std::vector<double> aty(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < m; ++i) {
      const auto& row = lp.constraint(i);
      double act = 0.0;
      double yi = out.duals[static_cast<size_t>(i)];
      for (const auto& t : row.terms) {
        double a = t.coefficient.to_double();
        act += a * out.values[static_cast<size_t>(t.column)];
        aty[static_cast<size_t>(t.column)] += yi * a;
      }
      double b = row.rhs.to_double();
      if (row.sense != Sense::GreaterEqual) violation = std::max(violation, act - b);
      if (row.sense != Sense::LessEqual) violation = std::max(violation, b - act);
      dual_objective += yi * b;
    }
    double dual_infeasibility = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto& v = lp.variable(j);
      double d = c[static_cast<size_t>(j)] - aty[static_cast<size_t>(j)];
      double xj = out.values[static_cast<size_t>(j)];
      if (d > 0) {
        if (!v.lower) dual_infeasibility = std::max(dual_infeasibility, d);
        else dual_objective += d * v.lower->to_double();
      } else if (d < 0) {
        if (!v.upper) dual_infeasibility = std::max(dual_infeasibility, -d);
        else dual_objective += d * v.upper->to_double();
      }
      (void)xj;
    }
    out.objective = 0.0;
    for (int j = 0; j < n; ++j) out.objective += c[static_cast<size_t>(j)] * out.values[static_cast<size_t>(j)];
    out.max_violation = violation;
    out.bound_gap = std::fabs(out.objective - dual_objective);
    out.dual_infeasibility = dual_infeasibility;
    bool ok = violation <= tolerance && out.bound_gap <= tolerance * (1.0 + std::fabs(out.objective)) &&
              dual_infeasibility <= tolerance;
    if (ok) return out;
    solver.reinvert();
  }
  throw NumericalFailure("float simplex could not close the bound gap below tolerance");
}

}  // namespace steiner_gap
