#include "koszulkit/graded.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

namespace koszulkit {

GradedSpace::GradedSpace(int s_min, std::vector<std::size_t> dims,
                         std::vector<std::vector<std::string>> labels)
    : s_min_(s_min), dims_(std::move(dims)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != dims_.size())
        throw DimensionMismatch("GradedSpace: label list does not cover the window");
    for (std::size_t k = 0; k < labels_.size(); ++k)
        if (!labels_[k].empty() && labels_[k].size() != dims_[k])
            throw DimensionMismatch("GradedSpace: label count differs from dimension");
}

std::size_t GradedSpace::dim(int s) const {
    if (!materialized(s))
        throw WindowError("degree " + std::to_string(s) + " outside materialized window");
    return dims_[static_cast<std::size_t>(s - s_min_)];
}

const std::vector<std::string>& GradedSpace::labels(int s) const {
    static const std::vector<std::string> none;
    if (!materialized(s))
        throw WindowError("degree " + std::to_string(s) + " outside materialized window");
    if (labels_.empty()) return none;
    return labels_[static_cast<std::size_t>(s - s_min_)];
}

GradedSpace GradedSpace::shift(int r) const {
    GradedSpace g = *this;
    g.s_min_ = s_min_ - r;
    return g;
}

std::vector<std::size_t> hilbert(const GradedSpace& g, int N) {
    if (N < 0) throw std::invalid_argument("hilbert: negative degree");
    if (!g.materialized(0) || !g.materialized(N))
        throw WindowError("hilbert: window does not cover [0, N]");
    std::vector<std::size_t> out;
    for (int s = 0; s <= N; ++s) out.push_back(g.dim(s));
    return out;
}

// ---------------------------------------------------------------- complexes

void BigradedComplex::set_component(int r, int s, std::size_t dim) { dims_[{r, s}] = dim; }

void BigradedComplex::set_differential(int r, int s, Mat d) {
    auto src = dims_.find({r, s});
    auto dst = dims_.find({r + 1, s});
    if (src == dims_.end() || dst == dims_.end())
        throw WindowError("set_differential: endpoint not materialized");
    if (d.rows() != dst->second || d.cols() != src->second)
        throw DimensionMismatch("set_differential: matrix does not conform to components");
    diffs_[{r, s}] = std::move(d);
}

std::size_t BigradedComplex::dim(int r, int s) const {
    auto it = dims_.find({r, s});
    if (it == dims_.end())
        throw WindowError("cell (" + std::to_string(r) + "," + std::to_string(s) +
                          ") not materialized");
    return it->second;
}

Mat BigradedComplex::differential(int r, int s) const {
    auto it = diffs_.find({r, s});
    if (it != diffs_.end()) return it->second;
    return Mat(dim(r + 1, s), dim(r, s));
}

std::vector<int> BigradedComplex::internal_degrees() const {
    std::set<int> s;
    for (const auto& [cell, d] : dims_) s.insert(cell.second);
    return {s.begin(), s.end()};
}

DSquaredResult check_d_squared(const BigradedComplex& c) {
    for (const auto& [cell, d] : c.components()) {
        auto [r, s] = cell;
        if (!c.materialized(r + 1, s) || !c.materialized(r + 2, s)) continue;
        if (!c.has_differential(r, s) || !c.has_differential(r + 1, s)) continue;
        if (!(c.differential(r + 1, s) * c.differential(r, s)).is_zero())
            return {false, cell};
    }
    return {};
}

const HomologyCell* HomologyReport::find(int r, int s) const {
    for (const auto& c : cells)
        if (c.r == r && c.s == s) return &c;
    return nullptr;
}

nlohmann::json HomologyReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cells)
        arr.push_back({{"r", c.r}, {"s", c.s}, {"dim", c.dim}, {"valid", c.valid}});
    return {{"cells", arr}};
}

namespace {

std::vector<HomologyCell> homology_column(const BigradedComplex& c, int s) {
    std::vector<HomologyCell> out;
    for (const auto& [cell, d] : c.components()) {
        if (cell.second != s) continue;
        const int r = cell.first;
        HomologyCell h;
        h.r = r;
        h.s = s;
        h.component_dim = d;
        const bool has_next = c.materialized(r + 1, s);
        const bool has_prev = c.materialized(r - 1, s);
        h.ker_dim = has_next ? d - rank(c.differential(r, s)) : d;
        h.im_dim = has_prev ? rank(c.differential(r - 1, s)) : 0;
        if (h.im_dim > h.ker_dim) {
            std::ostringstream msg;
            msg << "homology: image exceeds kernel at (" << r << "," << s << "), d^2 != 0";
            throw ContractViolation(msg.str());
        }
        h.dim = h.ker_dim - h.im_dim;
        h.valid = has_next && has_prev;
        out.push_back(h);
    }
    return out;
}

} // namespace

HomologyReport homology(const BigradedComplex& c, unsigned jobs) {
    auto dsq = check_d_squared(c);
    if (!dsq.ok) {
        std::ostringstream msg;
        msg << "homology: d^2 != 0 starting at (" << dsq.first_failure->first << ","
            << dsq.first_failure->second << ")";
        throw ContractViolation(msg.str());
    }
    const auto degrees = c.internal_degrees();
    std::vector<std::vector<HomologyCell>> columns(degrees.size());
    if (jobs <= 1) {
        for (std::size_t k = 0; k < degrees.size(); ++k) columns[k] = homology_column(c, degrees[k]);
    } else {
        for (std::size_t start = 0; start < degrees.size(); start += jobs) {
            std::vector<std::future<std::vector<HomologyCell>>> batch;
            for (std::size_t k = start; k < std::min(degrees.size(), start + jobs); ++k)
                batch.push_back(std::async(std::launch::async, homology_column, std::cref(c),
                                           degrees[k]));
            for (std::size_t k = 0; k < batch.size(); ++k) columns[start + k] = batch[k].get();
        }
    }
    HomologyReport rep;
    for (auto& col : columns) rep.cells.insert(rep.cells.end(), col.begin(), col.end());
    return rep;
}

long euler_components(const BigradedComplex& c, int s) {
    long chi = 0;
    for (const auto& [cell, d] : c.components())
        if (cell.second == s) chi += (cell.first % 2 == 0 ? 1 : -1) * static_cast<long>(d);
    return chi;
}

long euler_homology(const HomologyReport& h, int s) {
    long chi = 0;
    for (const auto& c : h.cells)
        if (c.s == s) chi += (c.r % 2 == 0 ? 1 : -1) * static_cast<long>(c.dim);
    return chi;
}

} // namespace koszulkit
