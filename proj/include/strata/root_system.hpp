#pragma once

#include "strata/exact.hpp"
#include "strata/mask.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace strata {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    auto operator<=>(const SimpleType&) const = default;
    std::string str() const;
};

// An ordered list of simple components, canonicalized at construction:
// components sorted, coincidences folded (rank-1 families -> A1, C2 -> B2,
// D2 -> A1 A1, D3 -> A3).
class TypeSpec {
public:
    TypeSpec() = default;
    explicit TypeSpec(std::vector<SimpleType> components);

    // Grammar: concatenation of family+rank tokens ("G2", "B3", "A1A1"),
    // exponent shorthand accepted ("A1^2B2").  Throws ParseError.
    static TypeSpec parse(const std::string& text);

    const std::vector<SimpleType>& components() const { return components_; }
    int total_rank() const;
    std::string str() const;  // canonical rendering, e.g. "A1^2B2"

    bool operator==(const TypeSpec&) const = default;

private:
    std::vector<SimpleType> components_;
};

// Isomorphism class of a (possibly reducible) root system: a multiset of
// simple types in canonical order.  The empty multiset is the trivial label.
class TypeLabel {
public:
    TypeLabel() = default;
    explicit TypeLabel(const std::vector<SimpleType>& parts);

    bool trivial() const { return mult_.empty(); }
    const std::map<SimpleType, int>& multiplicities() const { return mult_; }
    std::vector<SimpleType> parts() const;  // with repetitions
    std::string str() const;                // "A1^2B2"; trivial renders as "0"

    bool operator==(const TypeLabel&) const = default;
    auto operator<=>(const TypeLabel&) const = default;

private:
    std::map<SimpleType, int> mult_;
};

using Coord = std::int64_t;
using RootVec = std::vector<Coord>;
using Permutation = std::vector<int>;

// A root system with coordinates in the simple-root basis.  Immutable after
// construction; all queries are read-only.
class RootSystem {
public:
    explicit RootSystem(const TypeSpec& spec);

    const TypeSpec& spec() const { return spec_; }
    int rank() const { return rank_; }
    std::size_t num_roots() const { return roots_.size(); }
    const std::vector<RootVec>& roots() const { return roots_; }
    const RootVec& root(int i) const { return roots_[std::size_t(i)]; }
    const std::vector<int>& simple_indices() const { return simple_; }

    int index_of(const RootVec& v) const;  // -1 when v is not a root
    int negation(int i) const { return negation_[std::size_t(i)]; }
    const Permutation& negation_perm() const { return negation_; }
    const std::vector<Permutation>& weyl_gens() const { return gens_; }

    bool is_positive(int i) const { return positive_[std::size_t(i)]; }
    std::vector<int> positive_roots() const;

    // Cartan integer n(beta, alpha) = 2 (beta, alpha) / (alpha, alpha).
    int pairing(int beta, int alpha) const {
        return pairing_[std::size_t(beta) * roots_.size() + std::size_t(alpha)];
    }

    Coord norm2(int i) const { return norm2_[std::size_t(i)]; }
    Coord height(int i) const;

    // Inner product in the normalization where short roots of each component
    // have squared length 2.
    Coord inner(const RootVec& a, const RootVec& b) const;

    RootMask empty_mask() const { return RootMask(roots_.size()); }
    RootMask full_mask() const;

private:
    TypeSpec spec_;
    int rank_ = 0;
    std::vector<RootVec> roots_;
    std::vector<int> simple_;
    std::vector<Coord> gram_;          // rank x rank Gram matrix of the simple roots
    std::vector<std::int8_t> pairing_; // n(beta, alpha) for all pairs
    std::vector<Permutation> gens_;
    Permutation negation_;
    std::vector<bool> positive_;
    std::vector<Coord> norm2_;
    std::unordered_multimap<std::size_t, int> index_;  // hash of coords -> root index
    std::size_t vec_hash(const RootVec& v) const;
};

RootSystem build_root_system(const TypeSpec& spec);

inline int cartan_pairing(const RootSystem& rs, int beta, int alpha) {
    return rs.pairing(beta, alpha);
}

// Index of s_alpha(beta) = beta - n(beta, alpha) alpha.
int reflect(const RootSystem& rs, int alpha, int beta);

// |W| from the classical per-component formulas.
exact::Int weyl_order(const TypeSpec& spec);
exact::Int weyl_order(const TypeLabel& label);

// A base of the subsystem: the indecomposable elements of the positive part
// of psi, positivity taken from a fixed generic linear functional.
std::vector<int> simple_system(const RootSystem& rs, const RootMask& psi);

// Dynkin classification of the subsystem's simple system, coincidences folded.
TypeLabel identify_type(const RootSystem& rs, const RootMask& psi);

}  // namespace strata
