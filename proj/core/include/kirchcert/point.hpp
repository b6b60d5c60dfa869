#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kirchcert/rational.hpp"

namespace kirchcert {

// A point of evaluation in Q^n.  An optional cone tag names a subset T of the
// coordinates (1-based); a tagged point must have every coordinate in T
// strictly positive and every other coordinate nonnegative, which models a
// boundary point of the orthant lying over the support T.  The invariant is
// enforced at construction.
class RationalPoint {
public:
    explicit RationalPoint(std::vector<Rational> coords);
    RationalPoint(std::vector<Rational> coords, std::vector<int> cone_tag);

    static RationalPoint ones(int n);

    int dim() const { return static_cast<int>(coords_.size()); }
    const std::vector<Rational>& coords() const { return coords_; }
    // 1-based coordinate access, matching variable indices.
    const Rational& operator[](int i) const { return coords_.at(static_cast<std::size_t>(i) - 1); }
    const std::optional<std::vector<int>>& cone_tag() const { return cone_tag_; }

    bool all_positive() const;
    bool all_nonnegative() const;

    std::string str() const;  // comma-separated coordinates

private:
    std::vector<Rational> coords_;
    std::optional<std::vector<int>> cone_tag_;
};

}  // namespace kirchcert
