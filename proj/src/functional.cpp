#include "orthorel/functional.hpp"

#include <string>

#include "orthorel/errors.hpp"

namespace orthorel {

const Scalar& RecurrencePair::beta_at(std::size_t n) const {
  if (n >= beta.size()) throw DepthError("beta_" + std::to_string(n) + " not available");
  return beta[n];
}

const Scalar& RecurrencePair::gamma_at(std::size_t n) const {
  if (n == 0 || n > gamma.size()) throw DepthError("gamma_" + std::to_string(n) + " not available");
  return gamma[n - 1];
}

bool RecurrencePair::regular() const {
  for (const auto& g : gamma) {
    if (g == 0) return false;
  }
  return true;
}

MomentFunctional::MomentFunctional(std::vector<Scalar> moments) : moments_(std::move(moments)) {}

const Scalar& MomentFunctional::moment(std::size_t n) const {
  if (n >= moments_.size()) throw DepthError("moment " + std::to_string(n) + " beyond depth");
  return moments_[n];
}

MomentFunctional MomentFunctional::normalized() const {
  if (moments_.empty() || moments_[0] == 0) throw DomainError("cannot normalize a functional with <u,1> = 0");
  return scaled(1 / moments_[0]);
}

MomentFunctional MomentFunctional::scaled(const Scalar& factor) const {
  std::vector<Scalar> m = moments_;
  for (auto& x : m) x *= factor;
  return MomentFunctional(std::move(m));
}

MomentFunctional MomentFunctional::truncated(std::size_t count) const {
  if (count > moments_.size()) throw DepthError("cannot truncate to more moments than stored");
  return MomentFunctional(std::vector<Scalar>(moments_.begin(), moments_.begin() + static_cast<std::ptrdiff_t>(count)));
}

PolySeq mops_from_recurrence(const RecurrencePair& rec, std::size_t count) {
  PolySeq out;
  if (count == 0) return out;
  out.reserve(count);
  out.push_back(Polynomial::constant(1));
  for (std::size_t n = 0; n + 1 < count; ++n) {
    Polynomial next = Polynomial::linear(rec.beta_at(n)) * out[n];
    if (n >= 1) next -= out[n - 1] * rec.gamma_at(n);
    out.push_back(std::move(next));
  }
  return out;
}

MomentFunctional moments_from_recurrence(const RecurrencePair& rec, std::size_t depth) {
  // x^j expanded in the P-basis; only components that can still reach P_0
  // within the remaining depth are kept.
  std::vector<Scalar> coord{Scalar(1)};
  std::vector<Scalar> mu{Scalar(1)};
  mu.reserve(depth + 1);
  for (std::size_t j = 0; j < depth; ++j) {
    const std::size_t keep = std::min(j + 1, depth - j - 1) + 1;
    std::vector<Scalar> next(keep);
    for (std::size_t k = 0; k < coord.size(); ++k) {
      if (coord[k] == 0) continue;
      // x P_k = P_{k+1} + beta_k P_k + gamma_k P_{k-1}
      if (k + 1 < keep) next[k + 1] += coord[k];
      if (k < keep) next[k] += rec.beta_at(k) * coord[k];
      if (k >= 1 && k - 1 < keep) next[k - 1] += rec.gamma_at(k) * coord[k];
    }
    coord = std::move(next);
    mu.push_back(coord[0]);
  }
  return MomentFunctional(std::move(mu));
}

Scalar apply(const MomentFunctional& f, const Polynomial& p) {
  if (p.degree() > f.depth()) {
    throw DepthError("polynomial degree " + std::to_string(p.degree()) + " exceeds functional depth " +
                     std::to_string(f.depth()));
  }
  Scalar acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * f.moments()[k];
  return acc;
}

MomentFunctional left_multiply(const MomentFunctional& f, const Polynomial& phi) {
  if (phi.degree() > f.depth()) throw DepthError("multiplier degree exceeds functional depth");
  const std::size_t shift = phi.is_zero() ? 0 : static_cast<std::size_t>(phi.degree());
  const std::size_t count = f.moments().size() - shift;
  std::vector<Scalar> out(count);
  const auto& c = phi.coeffs();
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t k = 0; k < c.size(); ++k) out[n] += c[k] * f.moments()[n + k];
  }
  return MomentFunctional(std::move(out));
}

MomentFunctional add_point_mass(const MomentFunctional& f, const Scalar& xi, const Scalar& mass) {
  std::vector<Scalar> out = f.moments();
  Scalar power = 1;
  for (auto& m : out) {
    m += mass * power;
    power *= xi;
  }
  return MomentFunctional(std::move(out));
}

MomentFunctional divide_by_linear(const MomentFunctional& f, const Scalar& c, const Scalar& first_moment) {
  // nu_{n+1} - c nu_n = mu_n
  std::vector<Scalar> nu;
  nu.reserve(f.moments().size() + 1);
  nu.push_back(first_moment);
  for (const auto& mu : f.moments()) nu.push_back(c * nu.back() + mu);
  return MomentFunctional(std::move(nu));
}

RecoveredRecurrence recurrence_from_moments(const MomentFunctional& f) {
  RecoveredRecurrence out;
  if (f.depth() < 0) return out;
  const auto n_max = static_cast<std::size_t>(f.depth());
  const auto& mu = f.moments();

  // sigma_{k,l} = <u, P_k x^l>, kept for rows k-1 and k, l = 0..N.
  std::vector<Scalar> prev(n_max + 1);
  std::vector<Scalar> cur = mu;
  Scalar prev_alpha_term = 0;  // sigma_{k-1,k} / sigma_{k-1,k-1}

  for (std::size_t k = 0; 2 * k <= n_max; ++k) {
    if (cur[k] == 0) {
      out.report.first_vanishing = k;
      break;
    }
    out.report.nonzero_hankel = k + 1;
    if (k >= 1) out.rec.gamma.push_back(cur[k] / prev[k - 1]);
    if (2 * k + 1 > n_max) break;
    const Scalar ratio = cur[k + 1] / cur[k];
    const Scalar alpha = ratio - prev_alpha_term;
    out.rec.beta.push_back(alpha);

    std::vector<Scalar> next(n_max + 1);
    const Scalar gamma_k = k >= 1 ? out.rec.gamma.back() : Scalar(0);
    for (std::size_t l = k + 1; l + k + 1 <= n_max; ++l) {
      next[l] = cur[l + 1] - alpha * cur[l];
      if (k >= 1) next[l] -= gamma_k * prev[l];
    }
    prev_alpha_term = ratio;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

Scalar norm_squared(const RecurrencePair& rec, std::size_t n, const Scalar& mu0) {
  Scalar acc = mu0;
  for (std::size_t k = 1; k <= n; ++k) acc *= rec.gamma_at(k);
  return acc;
}

}  // namespace orthorel
