#ifndef EGTL_DATASET_HPP
#define EGTL_DATASET_HPP

#include <string>
#include <vector>

#include "egtl/params.hpp"

namespace egtl {

/// A validated sample of nonnegative lifetimes, stored sorted ascending.
class Dataset {
  public:
    /// Validates (>= 2 observations, all finite and >= 0) and sorts.
    explicit Dataset(std::vector<double> values, std::string label = {});

    const std::vector<double>& values() const { return values_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return values_.size(); }

    double min() const { return values_.front(); }
    double max() const { return values_.back(); }
    double mean() const;
    /// (1/n) sum x_i^2 — the uncentered second sample moment.
    double second_moment() const;

    /// Indices (in sorted order) of exact zeros; nonempty zeros make the
    /// density vanish for k >= 2.
    std::vector<std::size_t> zero_indices() const;

    /// A copy with every value multiplied by c > 0.
    Dataset scaled(double c) const;

  private:
    std::vector<double> values_;
    std::string label_;
};

}  // namespace egtl

#endif
