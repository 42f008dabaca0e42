#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linkforms {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A generator symbol outside its domain (even residue, E1 at level 1, ...).
struct invalid_generator : error {
    using error::error;
};

/// Gram data violating the compatibility invariant d_i * B_ij in Z.
struct invalid_gram : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// An exponential search exceeded its configured bound.
struct resource_error : error {
    using error::error;
};

struct precondition_error : error {
    using error::error;
};

/// A state the classification theorems promise cannot occur. Reaching it
/// means either a bug or a falsifying counterexample; it must never be
/// silently absorbed.
struct unreachable_state : error {
    using error::error;
};

/// Explicit bounds for the exponential oracle paths. They fail loudly
/// instead of hanging.
struct Limits {
    long long gauss_group_order = 1LL << 12;
    long long iso_group_order = 1LL << 6;
    long long enumerate_group_order = 1LL << 12;
    int candidate_free_indices = 8;
};

inline const Limits& default_limits() {
    static const Limits lim{};
    return lim;
}

}  // namespace linkforms
