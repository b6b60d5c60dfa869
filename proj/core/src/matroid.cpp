#include "kirchcert/matroid.hpp"

#include <algorithm>
#include <bit>

namespace kirchcert {

namespace {

std::uint64_t bit(int element) {
    return std::uint64_t{1} << (element - 1);
}

void check_element(const Matroid& m, int e) {
    if (e < 1 || e > m.ground_size())
        throw std::out_of_range("matroid: element index out of range");
}

}  // namespace

Matroid::Matroid(int ground_size, const std::vector<std::vector<int>>& bases) {
    std::vector<std::uint64_t> masks;
    masks.reserve(bases.size());
    for (const std::vector<int>& b : bases) {
        std::uint64_t m = 0;
        for (int e : b) {
            if (e < 1 || e > ground_size)
                throw std::out_of_range("matroid: basis element out of range");
            if (m & bit(e)) throw std::invalid_argument("matroid: repeated element in a basis");
            m |= bit(e);
        }
        masks.push_back(m);
    }
    *this = from_masks(ground_size, std::move(masks));
}

Matroid Matroid::from_masks(int ground_size, std::vector<std::uint64_t> masks) {
    if (ground_size < 1 || ground_size > 64)
        throw std::invalid_argument("matroid: ground size must be in [1, 64]");
    if (masks.empty()) throw std::invalid_argument("matroid: at least one basis required");
    std::sort(masks.begin(), masks.end());
    if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
        throw std::invalid_argument("matroid: duplicate basis");
    const int rank = std::popcount(masks.front());
    for (std::uint64_t m : masks) {
        if (std::popcount(m) != rank)
            throw std::invalid_argument("matroid: bases are not equicardinal");
        if (ground_size < 64 && (m >> ground_size) != 0)
            throw std::out_of_range("matroid: basis element out of range");
    }
    Matroid result;
    result.ground_size_ = ground_size;
    result.rank_ = rank;
    result.masks_ = std::move(masks);
    return result;
}

std::vector<std::vector<int>> Matroid::bases() const {
    std::vector<std::vector<int>> out;
    out.reserve(masks_.size());
    for (std::uint64_t m : masks_) {
        std::vector<int> b;
        for (int e = 1; e <= ground_size_; ++e)
            if (m & bit(e)) b.push_back(e);
        out.push_back(std::move(b));
    }
    return out;
}

bool Matroid::is_basis(std::uint64_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask);
}

bool Matroid::is_loop(int e) const {
    check_element(*this, e);
    for (std::uint64_t m : masks_)
        if (m & bit(e)) return false;
    return true;
}

bool Matroid::is_coloop(int e) const {
    check_element(*this, e);
    for (std::uint64_t m : masks_)
        if (!(m & bit(e))) return false;
    return true;
}

Matroid uniform_matroid(int k, int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("matroid: ground size must be in [1, 64]");
    if (k < 0 || k > n) throw std::out_of_range("matroid: rank must be in [0, n]");
    if (k == 0) throw std::invalid_argument("matroid: rank-0 matroid has only the empty basis, unsupported");
    std::vector<std::uint64_t> masks;
    // enumerate k-subsets as masks via the standard next-combination bit trick
    std::uint64_t m = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (m <= limit) {
        masks.push_back(m);
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        if (r > limit || r < m) break;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return Matroid::from_masks(n, std::move(masks));
}

Matroid graphic_matroid(const Graph& g) {
    if (!g.is_connected())
        throw DisconnectedGraphError("matroid: graph is disconnected, no spanning trees");
    if (g.num_edges() < 1) throw std::invalid_argument("matroid: graph has no edges");
    return Matroid::from_masks(g.num_edges(), spanning_trees(g).masks());
}

bool validate_exchange(const Matroid& m) {
    const auto& masks = m.basis_masks();
    for (std::uint64_t b1 : masks) {
        for (std::uint64_t b2 : masks) {
            std::uint64_t only1 = b1 & ~b2;
            while (only1) {
                const std::uint64_t e = only1 & (~only1 + 1);
                only1 ^= e;
                bool exchanged = false;
                std::uint64_t only2 = b2 & ~b1;
                while (only2) {
                    const std::uint64_t f = only2 & (~only2 + 1);
                    only2 ^= f;
                    if (m.is_basis((b1 ^ e) | f)) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged) return false;
            }
        }
    }
    return true;
}

SimplicityReport simplicity_check(const Matroid& m) {
    SimplicityReport rep;
    for (int e = 1; e <= m.ground_size(); ++e)
        if (m.is_loop(e)) rep.loops.push_back(e);
    for (int e = 1; e <= m.ground_size(); ++e) {
        if (m.is_loop(e)) continue;
        for (int f = e + 1; f <= m.ground_size(); ++f) {
            if (m.is_loop(f)) continue;
            bool common = false;
            for (std::uint64_t b : m.basis_masks()) {
                if ((b & bit(e)) && (b & bit(f))) {
                    common = true;
                    break;
                }
            }
            if (!common) rep.parallel_pairs.emplace_back(e, f);
        }
    }
    rep.simple = rep.loops.empty() && rep.parallel_pairs.empty();
    return rep;
}

MinorPair delete_contract(const Matroid& m, int e) {
    check_element(m, e);
    if (m.is_loop(e)) throw LoopElementError("matroid: cannot delete/contract a loop");
    if (m.is_coloop(e)) throw ColoopElementError("matroid: cannot delete/contract a coloop");
    std::vector<std::uint64_t> del;
    std::vector<std::uint64_t> con;
    for (std::uint64_t b : m.basis_masks()) {
        if (b & bit(e))
            con.push_back(b & ~bit(e));
        else
            del.push_back(b);
    }
    return MinorPair{Matroid::from_masks(m.ground_size(), std::move(del)),
                     Matroid::from_masks(m.ground_size(), std::move(con))};
}

Polynomial basis_generating_function(const Matroid& m) {
    Polynomial f(m.ground_size());
    for (std::uint64_t b : m.basis_masks()) {
        ExponentVector exp(static_cast<std::size_t>(m.ground_size()), 0);
        for (int e = 1; e <= m.ground_size(); ++e)
            if (b & bit(e)) exp[static_cast<std::size_t>(e) - 1] = 1;
        f += Polynomial::monomial(m.ground_size(), exp, Rational(1));
    }
    return f;
}

std::vector<int> fundamental_circuit(const Matroid& m, int e, const std::vector<int>& basis) {
    check_element(m, e);
    std::uint64_t b = 0;
    for (int x : basis) {
        check_element(m, x);
        b |= bit(x);
    }
    if (!m.is_basis(b)) throw std::invalid_argument("matroid: given set is not a basis");
    if (b & bit(e)) throw std::invalid_argument("matroid: element already in the basis");
    if (m.is_loop(e)) throw LoopElementError("matroid: fundamental circuit of a loop is not defined here");
    std::vector<int> circuit{e};
    for (int x : basis)
        if (m.is_basis((b & ~bit(x)) | bit(e))) circuit.push_back(x);
    std::sort(circuit.begin(), circuit.end());
    return circuit;
}

}  // namespace kirchcert
