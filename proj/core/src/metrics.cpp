#include "hullselect/metrics.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "hullselect/conventions.hpp"

namespace hullselect {

ConfusionCounts confusion(const SelectionMask& selected, const SelectionMask& active) {
  ConfusionCounts c;
  c.false_pos = difference_size(selected, active);
  c.false_neg = difference_size(active, selected);
  c.selected_size = selected.size();
  c.active_size = active.size();
  c.n = selected.n();
  return c;
}

ProportionSet proportions(const ConfusionCounts& c) {
  const auto d = [](std::size_t v) { return static_cast<double>(v); };
  ProportionSet p;
  p.fdp = safe_ratio(d(c.false_pos), d(c.selected_size));
  p.fpp = safe_ratio(d(c.false_pos), d(c.n - c.active_size));
  p.ndp = safe_ratio(d(c.false_neg), d(c.active_size));
  p.fnp = safe_ratio(d(c.false_neg), d(c.n - c.selected_size));
  p.hamming_loss = c.hamming();
  return p;
}

namespace {

// Mean and standard error with compensated sums in index order.
class Moments {
 public:
  void add(double v) {
    sum_.add(v);
    sum_sq_.add(v * v);
    ++count_;
  }
  double mean() const { return sum_.result() / static_cast<double>(count_); }
  double standard_error() const {
    if (count_ < 2) return 0.0;
    const double r = static_cast<double>(count_);
    const double m = mean();
    const double var = std::max(0.0, (sum_sq_.result() - r * m * m) / (r - 1.0));
    return std::sqrt(var / r);
  }

 private:
  CompensatedSum sum_;
  CompensatedSum sum_sq_;
  std::size_t count_ = 0;
};

}  // namespace

RateReport aggregate(std::span<const ConfusionCounts> per_rep, std::span<const std::size_t> ks) {
  if (per_rep.empty()) throw std::invalid_argument("aggregate: no replications");
  std::set<std::size_t> k_set{1};
  for (std::size_t k : ks) {
    if (k == 0) throw std::invalid_argument("aggregate: k-FWER levels must be positive");
    k_set.insert(k);
  }

  Moments fdr, fpr, ndr, fnr, ham;
  RateReport out;
  for (std::size_t k : k_set) {
    out.kfwer_count[k] = 0;
    out.kfwnr_count[k] = 0;
  }
  const std::size_t n = per_rep.front().n;
  for (const ConfusionCounts& c : per_rep) {
    if (c.n != n) throw std::invalid_argument("aggregate: replications disagree on n");
    const ProportionSet p = proportions(c);
    fdr.add(p.fdp);
    fpr.add(p.fpp);
    ndr.add(p.ndp);
    fnr.add(p.fnp);
    ham.add(static_cast<double>(p.hamming_loss));
    out.total_false_pos += c.false_pos;
    out.total_false_neg += c.false_neg;
    for (std::size_t k : k_set) {
      if (c.false_pos >= k) ++out.kfwer_count[k];
      if (c.false_neg >= k) ++out.kfwnr_count[k];
    }
  }

  const double r = static_cast<double>(per_rep.size());
  out.replications = per_rep.size();
  out.fdr = fdr.mean();
  out.fpr = fpr.mean();
  out.ndr = ndr.mean();
  out.fnr = fnr.mean();
  out.mtr = {out.fdr + out.ndr, out.fdr + out.fnr, out.fpr + out.ndr, out.fpr + out.fnr};
  out.hamming_risk = ham.mean();
  out.mean_false_pos = static_cast<double>(out.total_false_pos) / r;
  out.mean_false_neg = static_cast<double>(out.total_false_neg) / r;
  out.standard_errors = {fdr.standard_error(), fpr.standard_error(), ndr.standard_error(),
                 fnr.standard_error(), ham.standard_error()};
  for (std::size_t k : k_set) {
    out.kfwer[k] = static_cast<double>(out.kfwer_count.at(k)) / r;
    out.kfwnr[k] = static_cast<double>(out.kfwnr_count.at(k)) / r;
  }
  return out;
}

bool markov_holds(const RateReport& report) {
  for (const auto& [k, count] : report.kfwer_count) {
    if (k * count > report.total_false_pos) return false;
  }
  for (const auto& [k, count] : report.kfwnr_count) {
    if (k * count > report.total_false_neg) return false;
  }
  return true;
}

}  // namespace hullselect
