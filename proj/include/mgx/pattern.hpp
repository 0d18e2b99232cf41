#pragma once

#include <cstdint>
#include <vector>

#include "mgx/common.hpp"

namespace mgx {

// A weighting pattern on k vertices: a loop multiplicity per vertex and a
// multiplicity per unordered pair.  Blow-ups replace vertex u by a class of
// c_u clones; pairs inside a class inherit the loop multiplicity of u.
class Pattern {
public:
    Pattern(std::vector<std::uint32_t> loops, std::vector<std::uint32_t> pairs)
        : loops_(std::move(loops)), pairs_(std::move(pairs)) {
        const int k = static_cast<int>(loops_.size());
        if (k == 0) throw input_error("Pattern: needs at least one vertex");
        if (pairs_.size() != static_cast<std::size_t>(choose2(k)))
            throw input_error("Pattern: pair vector has wrong length");
    }

    int k() const { return static_cast<int>(loops_.size()); }

    std::uint32_t loop(int u) const { return loops_.at(u); }

    std::uint32_t pair(int u, int v) const {
        if (u == v || u < 0 || v < 0 || u >= k() || v >= k())
            throw input_error("Pattern::pair: invalid vertex pair");
        return pairs_[pair_index(u, v, k())];
    }

    // Entry of the pattern adjacency matrix (diagonal = loops).
    std::uint32_t entry(int u, int v) const { return u == v ? loop(u) : pair(u, v); }

    const std::vector<std::uint32_t>& loops() const { return loops_; }
    const std::vector<std::uint32_t>& pairs() const { return pairs_; }

    bool operator==(const Pattern& other) const {
        return loops_ == other.loops_ && pairs_ == other.pairs_;
    }

    // Pattern induced on a vertex subset (given in increasing order).
    Pattern induced(const std::vector<int>& vs) const {
        std::vector<std::uint32_t> l, p;
        for (int v : vs) l.push_back(loop(v));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) p.push_back(pair(vs[i], vs[j]));
        return Pattern(std::move(l), std::move(p));
    }

private:
    std::vector<std::uint32_t> loops_;
    std::vector<std::uint32_t> pairs_;
};

}  // namespace mgx
