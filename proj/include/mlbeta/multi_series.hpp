#pragma once

#include <mlbeta/numeric_kernel.hpp>

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace mlbeta {

/// Total-degree blocks of a product of power series.
///
/// Each factor i is a sequence P_i(0) = 1, P_i(r+1) = P_i(r) * ratio_i(r).
/// Successive calls to next() return the degree-d coefficient of the product,
/// the sum over r_1+...+r_n = d of P_1(r_1)...P_n(r_n), for d = 0, 1, 2, ...
/// Each new degree costs O(n d).
///
/// With no factors the product is the constant 1.
class DegreeBlocks {
public:
    using Ratio = std::function<double(std::size_t)>;

    DegreeBlocks() = default;
    explicit DegreeBlocks(std::vector<Ratio> ratios)
        : ratios_(std::move(ratios)), seq_(ratios_.size()), conv_(ratios_.size())
    {
    }

    /// Factor (b)_r z^r / r!, the building block of F1, F_D and the
    /// (1 - z u)^{-b} expansions.
    static Ratio binomial(double b, double z)
    {
        return [b, z](std::size_t r) {
            const double rr = static_cast<double>(r);
            return (b + rr) * z / (rr + 1.0);
        };
    }

    [[nodiscard]] std::size_t factors() const { return ratios_.size(); }

    double next()
    {
        const std::size_t d = degree_++;
        if (ratios_.empty()) return d == 0 ? 1.0 : 0.0;
        for (std::size_t i = 0; i < ratios_.size(); ++i) {
            auto& p = seq_[i];
            p.push_back(d == 0 ? 1.0 : p.back() * ratios_[i](d - 1));
            double c;
            if (i == 0) {
                c = p[d];
            } else {
                const auto& prev = conv_[i - 1];
                c = 0.0;
                for (std::size_t j = 0; j <= d; ++j) c += prev[j] * p[d - j];
            }
            conv_[i].push_back(c);
        }
        return conv_.back()[d];
    }

private:
    std::vector<Ratio> ratios_;
    std::vector<std::vector<double>> seq_;
    std::vector<std::vector<double>> conv_;
    std::size_t degree_ = 0;
};

} // namespace mlbeta
