#pragma once

// Graded vector spaces and bigraded complexes with truncation windows.
//
// Differentials are opaque matrices here; sign conventions belong to the
// constructors that build the complexes.

#include "koszulkit/exactlin.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace koszulkit {

class WindowError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A graded space materialized on [s_min, s_max]. Degrees outside the window
/// are unknown, which is different from being zero.
class GradedSpace {
public:
    GradedSpace() = default;
    GradedSpace(int s_min, std::vector<std::size_t> dims,
                std::vector<std::vector<std::string>> labels = {});

    int s_min() const noexcept { return s_min_; }
    int s_max() const noexcept { return s_min_ + static_cast<int>(dims_.size()) - 1; }
    bool materialized(int s) const noexcept { return s >= s_min() && s <= s_max(); }
    /// Throws WindowError outside the window.
    std::size_t dim(int s) const;
    const std::vector<std::string>& labels(int s) const;

    /// X<r>: (X<r>)_i = X_{i+r}.
    GradedSpace shift(int r) const;

private:
    int s_min_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<std::string>> labels_;
};

/// [dim g_0, ..., dim g_N].
std::vector<std::size_t> hilbert(const GradedSpace& g, int N);

/// Degree-preserving (up to a stored shift) family of matrices.
struct GradedMap {
    int shift = 0;                 // f_s : source_s -> target_{s+shift}
    std::map<int, Mat> components;
};

using Cell = std::pair<int, int>;  // (homological r, internal s)

/// Components (r, s) with differentials d : (r, s) -> (r + 1, s).
/// A cell absent from `dims` is unmaterialized. A missing differential
/// between two materialized cells is the zero map.
class BigradedComplex {
public:
    void set_component(int r, int s, std::size_t dim);
    void set_differential(int r, int s, Mat d);

    bool materialized(int r, int s) const { return dims_.count({r, s}) != 0; }
    std::size_t dim(int r, int s) const;
    /// The matrix (r, s) -> (r + 1, s); zero when not stored.
    Mat differential(int r, int s) const;
    bool has_differential(int r, int s) const { return diffs_.count({r, s}) != 0; }

    const std::map<Cell, std::size_t>& components() const noexcept { return dims_; }
    std::vector<int> internal_degrees() const;

private:
    std::map<Cell, std::size_t> dims_;
    std::map<Cell, Mat> diffs_;
};

struct DSquaredResult {
    bool ok = true;
    std::optional<Cell> first_failure;  // source cell of the nonzero composite
};

DSquaredResult check_d_squared(const BigradedComplex& c);

struct HomologyCell {
    int r = 0, s = 0;
    std::size_t component_dim = 0;
    std::size_t ker_dim = 0;
    std::size_t im_dim = 0;   // image of the incoming differential
    std::size_t dim = 0;      // ker - im
    bool valid = false;       // both neighbours materialized
};

struct HomologyReport {
    std::vector<HomologyCell> cells;  // sorted by (s, r)
    const HomologyCell* find(int r, int s) const;
    nlohmann::json to_json() const;
};

class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Throws ContractViolation when d^2 != 0. `jobs` > 1 spreads internal
/// degrees across threads.
HomologyReport homology(const BigradedComplex& c, unsigned jobs = 1);

/// Alternating sum of component dims in column s, over materialized cells.
long euler_components(const BigradedComplex& c, int s);
long euler_homology(const HomologyReport& h, int s);

} // namespace koszulkit
