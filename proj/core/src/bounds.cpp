#include "hullselect/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hullselect {

void BoundQuery::validate() const {
  if (s < 1) throw std::invalid_argument("BoundQuery: s must be >= 1");
  if (s >= n) throw std::domain_error("BoundQuery: requires n/s > 1");
  if (!(s_prime > 0.0) || s_prime > static_cast<double>(s)) {
    throw std::invalid_argument("BoundQuery: requires 0 < s' <= s");
  }
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("BoundQuery: a must be > 0");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("BoundQuery: sigma must be > 0");
  }
}

double std_normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double psi_plus(const BoundQuery& q) {
  q.validate();
  const double ratio = static_cast<double>(q.n) / static_cast<double>(q.s) - 1.0;
  const double log_term = std::log(ratio);
  const double centre = -q.a / (2.0 * q.sigma);
  const double shift = (q.sigma / q.a) * log_term;
  return ratio * std_normal_cdf(centre - shift) + std_normal_cdf(centre + shift);
}

LowerBound hamming_lower_bound(const BoundQuery& q) {
  const double psi = psi_plus(q);
  const double s = static_cast<double>(q.s);
  const double gap = s - q.s_prime;
  const double value = q.s_prime * psi - 4.0 * q.s_prime * std::exp(-gap * gap / (2.0 * s));
  return {value, value <= 0.0};
}

bool inconsistency_regime(std::size_t n, std::size_t s, double a, double sigma) {
  const double ratio = static_cast<double>(n) / static_cast<double>(s) - 1.0;
  return a * a <= 2.0 * sigma * sigma * std::log(ratio);
}

double inconsistency_floor(std::size_t s) {
  const double sd = static_cast<double>(s);
  return sd * (0.25 - 2.0 * std::exp(-sd / 8.0));
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::kInconsistent:
      return "inconsistent";
    case Regime::kLowerBounded:
      return "lower-bounded";
    case Regime::kVacuous:
      return "vacuous";
  }
  return "unknown";
}

std::vector<PhaseRow> phase_table(std::span<const std::size_t> n_list,
                                  std::span<const std::size_t> s_list,
                                  std::span<const double> A_list, double sigma) {
  if (n_list.empty() || s_list.empty() || A_list.empty()) {
    throw std::invalid_argument("phase_table: empty grid");
  }
  std::vector<PhaseRow> rows;
  rows.reserve(n_list.size() * s_list.size() * A_list.size());
  for (std::size_t n : n_list) {
    for (std::size_t s : s_list) {
      for (double A : A_list) {
        if (!(A > 0.0)) throw std::invalid_argument("phase_table: A must be > 0");
        PhaseRow row{n, s, A, 0.0, 0.0, Regime::kVacuous};
        row.a = sigma * std::sqrt(A * std::log(std::numbers::e * static_cast<double>(n) /
                                               static_cast<double>(s)));
        const BoundQuery q{n, s, static_cast<double>(s) / 2.0, row.a, sigma};
        const LowerBound lb = hamming_lower_bound(q);
        row.lower_bound = lb.value;
        if (inconsistency_regime(n, s, row.a, sigma)) {
          row.regime = Regime::kInconsistent;
        } else {
          row.regime = lb.vacuous ? Regime::kVacuous : Regime::kLowerBounded;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string phase_table_csv(const std::vector<PhaseRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "n,s,A,a,lower_bound,regime\n";
  for (const PhaseRow& r : rows) {
    out << r.n << ',' << r.s << ',' << r.A << ',' << r.a << ',' << r.lower_bound << ','
        << to_string(r.regime) << '\n';
  }
  return out.str();
}

}  // namespace hullselect
