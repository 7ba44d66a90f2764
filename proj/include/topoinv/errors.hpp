#pragma once

#include <stdexcept>
#include <string>

namespace topoinv {

// Bad input: non-Hermitian kernel, malformed config, out-of-range argument.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Spectral (near-)degeneracy across the occupied/empty split, or a singular
// link overlap. Carries the grid location; (-1,-1) when not tied to a point.
class DegeneracyError : public std::runtime_error {
public:
    DegeneracyError(const std::string& what, int j = -1, int k = -1)
        : std::runtime_error(what), j_(j), k_(k) {}
    int grid_j() const { return j_; }
    int grid_k() const { return k_; }

private:
    int j_;
    int k_;
};

// |s_i(p)| fell below the normalization floor: the pair of modes is
// (numerically) maximally entangled and the unit field is undefined there.
class MaxEntanglementError : public std::runtime_error {
public:
    MaxEntanglementError(const std::string& what, int j = -1, int k = -1)
        : std::runtime_error(what), j_(j), k_(k) {}
    int grid_j() const { return j_; }
    int grid_k() const { return k_; }

private:
    int j_;
    int k_;
};

} // namespace topoinv
