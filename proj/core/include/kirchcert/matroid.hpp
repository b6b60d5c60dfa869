#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kirchcert/graph.hpp"
#include "kirchcert/polynomial.hpp"

namespace kirchcert {

struct LoopElementError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ColoopElementError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Matroid on ground set {1..ground_size}, presented by its list of bases as
// element bitmasks (bit k-1 <-> element k), sorted ascending.  Construction
// enforces that bases exist, are equicardinal and distinct; the basis-exchange
// axiom itself is checked separately by validate_exchange.
class Matroid {
public:
    Matroid(int ground_size, const std::vector<std::vector<int>>& bases);  // 1-based elements
    static Matroid from_masks(int ground_size, std::vector<std::uint64_t> masks);

    int ground_size() const { return ground_size_; }
    int rank() const { return rank_; }
    std::size_t basis_count() const { return masks_.size(); }
    const std::vector<std::uint64_t>& basis_masks() const { return masks_; }
    std::vector<std::vector<int>> bases() const;  // 1-based, in mask order
    bool is_basis(std::uint64_t mask) const;

    bool is_loop(int e) const;    // element in no basis
    bool is_coloop(int e) const;  // element in every basis

private:
    Matroid() : ground_size_(0), rank_(0) {}

    int ground_size_;
    int rank_;
    std::vector<std::uint64_t> masks_;
};

// Uniform matroid U_{k,n}: every k-subset of {1..n} is a basis.
Matroid uniform_matroid(int k, int n);

// Bases are the spanning trees; element k is edge k.  Requires connectivity.
Matroid graphic_matroid(const Graph& g);

// Exhaustive basis-exchange check: for all bases B1, B2 and e in B1 \ B2
// there is f in B2 \ B1 with B1 - e + f a basis.
bool validate_exchange(const Matroid& m);

// Loops and parallel pairs (two non-loops contained in no common basis).
SimplicityReport simplicity_check(const Matroid& m);

// Deletion and contraction by a single element.  Both minors keep the ambient
// ground size (the removed element simply lies in no basis), so that the
// generating-function identity F_M = F_del + x_e * F_con reads in one
// variable set.  The element must be neither a loop nor a coloop.
struct MinorPair {
    Matroid deletion;
    Matroid contraction;
};
MinorPair delete_contract(const Matroid& m, int e);

// F_M = sum over bases B of prod_{e in B} x_e, in ground_size variables.
Polynomial basis_generating_function(const Matroid& m);

// Fundamental circuit C(e, B) = {e} + {b in B : B - b + e is a basis}, sorted.
// Requires B a basis and e a non-loop outside B.
std::vector<int> fundamental_circuit(const Matroid& m, int e, const std::vector<int>& basis);

}  // namespace kirchcert
