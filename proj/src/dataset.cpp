#include "egtl/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace egtl {

Dataset::Dataset(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.size() < 2)
        throw DataQualityError("Dataset: need at least 2 observations, got " +
                               std::to_string(values_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw DataQualityError("Dataset: non-finite value at index " + std::to_string(i));
        if (values_[i] < 0.0)
            throw DataQualityError("Dataset: negative value " + std::to_string(values_[i]) +
                                   " at index " + std::to_string(i));
    }
    std::sort(values_.begin(), values_.end());
}

double Dataset::mean() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0) /
           static_cast<double>(values_.size());
}

double Dataset::second_moment() const {
    double s = 0.0;
    for (double x : values_) s += x * x;
    return s / static_cast<double>(values_.size());
}

std::vector<std::size_t> Dataset::zero_indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < values_.size() && values_[i] == 0.0; ++i) idx.push_back(i);
    return idx;
}

Dataset Dataset::scaled(double c) const {
    std::vector<double> v(values_);
    for (double& x : v) x *= c;
    return Dataset(std::move(v), label_);
}

}  // namespace egtl
