#include "kirchcert/point.hpp"

#include <algorithm>
#include <stdexcept>

namespace kirchcert {

RationalPoint::RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("point: dimension must be at least 1");
}

RationalPoint::RationalPoint(std::vector<Rational> coords, std::vector<int> cone_tag)
    : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("point: dimension must be at least 1");
    std::sort(cone_tag.begin(), cone_tag.end());
    cone_tag.erase(std::unique(cone_tag.begin(), cone_tag.end()), cone_tag.end());
    for (int i : cone_tag)
        if (i < 1 || i > dim())
            throw std::out_of_range("point: cone tag index out of range");
    if (!all_nonnegative())
        throw std::invalid_argument("point: tagged point has a negative coordinate");
    for (int i : cone_tag)
        if (coords_[static_cast<std::size_t>(i) - 1].sign() <= 0)
            throw std::invalid_argument("point: cone-tag coordinate must be strictly positive");
    cone_tag_ = std::move(cone_tag);
}

RationalPoint RationalPoint::ones(int n) {
    return RationalPoint(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

bool RationalPoint::all_positive() const {
    for (const Rational& c : coords_)
        if (c.sign() <= 0) return false;
    return true;
}

bool RationalPoint::all_nonnegative() const {
    for (const Rational& c : coords_)
        if (c.sign() < 0) return false;
    return true;
}

std::string RationalPoint::str() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ',';
        s += coords_[i].str();
    }
    return s;
}

}  // namespace kirchcert
