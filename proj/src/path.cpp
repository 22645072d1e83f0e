#include "boxball/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxball {

LatticePath::LatticePath(std::vector<std::int32_t> heights) : h_(std::move(heights)) {
    if (h_.empty()) h_.push_back(0);
    if (h_.front() < 0) throw std::invalid_argument("lattice path heights must be nonnegative");
    for (std::size_t k = 1; k < h_.size(); ++k) {
        if (h_[k] < 0) throw std::invalid_argument("lattice path heights must be nonnegative");
        const std::int32_t d = h_[k] - h_[k - 1];
        if (d < -1 || d > 1)
            throw std::invalid_argument("lattice path steps must lie in {-1, 0, +1}");
    }
}

std::int32_t LatticePath::max_height() const {
    return *std::max_element(h_.begin(), h_.end());
}

std::int64_t LatticePath::rightmost_argmax() const {
    const std::int32_t m = max_height();
    for (std::int64_t k = length() - 1; k >= 0; --k)
        if (h_[static_cast<std::size_t>(k)] == m) return k;
    return 0;
}

LatticePath LatticePath::canonical() const {
    std::size_t end = h_.size();
    while (end >= 2 && h_[end - 1] == h_[end - 2]) --end;
    return LatticePath(std::vector<std::int32_t>(h_.begin(), h_.begin() + static_cast<std::ptrdiff_t>(end)));
}

bool LatticePath::operator==(const LatticePath& other) const {
    return canonical().heights() == other.canonical().heights();
}

bool LatticePath::is_motzkin() const { return h_.front() == 0 && h_.back() == 0; }

bool LatticePath::is_h_restricted() const {
    if (!is_motzkin()) return false;
    for (std::size_t k = 1; k < h_.size(); ++k)
        if (h_[k] == h_[k - 1] && h_[k] != 0) return false;
    return true;
}

std::string LatticePath::serialize() const {
    std::string out;
    for (std::size_t k = 0; k < h_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(h_[k]);
    }
    return out;
}

LatticePath LatticePath::parse(std::string_view text) {
    std::vector<std::int32_t> h;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        h.push_back(static_cast<std::int32_t>(std::stol(std::string(text.substr(pos, next - pos)))));
        pos = next + 1;
    }
    return LatticePath(std::move(h));
}

LatticePath path_of_config(const BoxBallConfig& cfg) {
    const std::int64_t last = cfg.last_ball();
    std::vector<std::int32_t> h;
    h.reserve(static_cast<std::size_t>(last) + 2);
    h.push_back(0);
    std::int32_t height = 0;
    for (std::int64_t k = 1; k <= last; ++k) {
        if (cfg.occupied(k))
            ++height;
        else if (height > 0)
            --height;
        h.push_back(height);
    }
    while (height > 0) h.push_back(--height);
    return LatticePath(std::move(h));
}

BoxBallConfig config_of_path(const LatticePath& path) {
    if (!path.is_h_restricted())
        throw std::domain_error("config_of_path requires an h-restricted Motzkin path");
    std::vector<std::int64_t> boxes;
    for (std::int64_t k = 0; k + 1 < path.length(); ++k)
        if (path.at(k + 1) - path.at(k) == 1) boxes.push_back(k + 1);
    return BoxBallConfig::from_boxes(boxes);
}

BoxBallConfig next_config_of_path(const LatticePath& path) {
    if (!path.is_h_restricted())
        throw std::domain_error("next_config_of_path requires an h-restricted Motzkin path");
    std::vector<std::int64_t> boxes;
    for (std::int64_t k = 0; k + 1 < path.length(); ++k)
        if (path.at(k + 1) - path.at(k) == -1) boxes.push_back(k + 1);
    return BoxBallConfig::from_boxes(boxes);
}

LatticePath backward_path(const BoxBallConfig& cfg) {
    const std::int64_t last = cfg.last_ball();
    std::vector<std::int32_t> h(static_cast<std::size_t>(last) + 1, 0);
    for (std::int64_t k = last - 1; k >= 0; --k) {
        const std::int32_t right = h[static_cast<std::size_t>(k + 1)];
        if (cfg.occupied(k + 1))
            h[static_cast<std::size_t>(k)] = right + 1;
        else if (right >= 1)
            h[static_cast<std::size_t>(k)] = right - 1;
        else
            h[static_cast<std::size_t>(k)] = 0;
    }
    return LatticePath(std::move(h));
}

std::vector<HillInterval> hill_intervals(const LatticePath& path) {
    std::vector<HillInterval> hills;
    const std::int64_t n = path.length();
    std::int64_t a = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        if (k < n && path.at(k) == path.at(a)) continue;
        // [a, k-1] is a maximal constant run within the explicit prefix.
        const std::int32_t v = path.at(a);
        if (v >= 1 && path.at(a - 1) == v - 1 && path.at(k) == v - 1)
            hills.push_back({a, k - 1});
        a = k;
    }
    return hills;
}

LatticePath hill_flatten(const LatticePath& path) {
    std::vector<std::int32_t> h(path.heights());
    for (const HillInterval& hill : hill_intervals(path))
        for (std::int64_t k = hill.a; k <= hill.b; ++k) --h[static_cast<std::size_t>(k)];
    return LatticePath(std::move(h));
}

namespace {

template <typename T>
std::vector<T> pivot_excursion_impl(const std::vector<T>& f, std::size_t pivot) {
    if (pivot >= f.size()) throw std::domain_error("excursion pivot out of range");
    std::vector<T> out(f.size());
    T running = f[pivot];
    for (std::size_t k = pivot + 1; k-- > 0;) {
        running = std::min(running, f[k]);
        out[k] = f[k] - running;
    }
    running = f[pivot];
    for (std::size_t k = pivot; k < f.size(); ++k) {
        running = std::min(running, f[k]);
        out[k] = f[k] - running;
    }
    return out;
}

template <typename T>
std::size_t rightmost_argmax_impl(const std::vector<T>& f) {
    std::size_t best = 0;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f[k] >= f[best]) best = k;
    return best;
}

}  // namespace

LatticePath pivot_excursion(const LatticePath& path, std::int64_t pivot) {
    if (pivot < 0 || pivot >= path.length())
        throw std::domain_error("excursion pivot out of range");
    return LatticePath(pivot_excursion_impl(path.heights(), static_cast<std::size_t>(pivot)));
}

LatticePath excursion(const LatticePath& path) {
    return pivot_excursion(path, path.rightmost_argmax());
}

std::vector<double> pivot_excursion(const std::vector<double>& f, std::size_t pivot) {
    return pivot_excursion_impl(f, pivot);
}

std::vector<double> excursion(const std::vector<double>& f) {
    return pivot_excursion_impl(f, rightmost_argmax_impl(f));
}

std::size_t rightmost_argmax(const std::vector<double>& f) { return rightmost_argmax_impl(f); }

std::vector<std::int64_t> young_rows(const LatticePath& path) {
    if (!path.is_motzkin()) throw std::domain_error("young_rows requires a Motzkin path");
    std::vector<std::int64_t> rows;
    LatticePath cur = path.canonical();
    while (cur.max_height() > 0) {
        const std::int32_t before = cur.max_height();
        rows.push_back(static_cast<std::int64_t>(hill_intervals(cur).size()));
        cur = hill_flatten(cur);
        if (cur.max_height() != before - 1)
            throw std::logic_error("hill_flatten failed to lower the maximum by one");
    }
    return rows;
}

std::vector<std::int64_t> young_columns(const LatticePath& path) {
    if (!path.is_motzkin()) throw std::domain_error("young_columns requires a Motzkin path");
    std::vector<std::int64_t> cols;
    LatticePath cur = path.canonical();
    std::size_t hills = hill_intervals(cur).size();
    while (hills > 0) {
        const std::int32_t top = cur.max_height();
        if (top < 1) throw std::logic_error("hills remain but the path is flat");
        cols.push_back(top);
        cur = excursion(cur);
        const std::size_t next_hills = hill_intervals(cur).size();
        if (next_hills != hills - 1)
            throw std::logic_error("excursion did not remove exactly one hill");
        hills = next_hills;
    }
    if (cur.max_height() != 0) throw std::logic_error("columns exhausted but path is not flat");
    return cols;
}

YoungDiagram young_diagram(const LatticePath& path) {
    return YoungDiagram::checked(young_columns(path), young_rows(path));
}

void DiagramScanner::down() {
    if (depth_ <= 0) throw std::logic_error("diagram scan: down-step at height zero");
    const std::int32_t sub_max = stack_[static_cast<std::size_t>(depth_ - 1)];
    const std::int64_t row = sub_max - depth_ + 1;  // exact subexcursion height
    if (row > static_cast<std::int64_t>(rows_.size())) rows_.resize(static_cast<std::size_t>(row), 0);
    ++rows_[static_cast<std::size_t>(row - 1)];
    --depth_;
    if (depth_ > 0) {
        std::int32_t& parent = stack_[static_cast<std::size_t>(depth_ - 1)];
        parent = std::max(parent, sub_max);
    }
}

YoungDiagram DiagramScanner::diagram() const {
    if (depth_ != 0) throw std::logic_error("diagram scan: open subexcursions remain");
    return YoungDiagram::from_rows(rows_);
}

YoungDiagram young_diagram_scan(const LatticePath& path) {
    if (!path.starts_at_zero() || path.heights().back() != 0)
        throw std::domain_error("young_diagram_scan requires a Motzkin path");
    DiagramScanner sc;
    for (std::int64_t k = 0; k + 1 < path.length(); ++k) {
        const std::int32_t d = path.at(k + 1) - path.at(k);
        if (d == 1)
            sc.up();
        else if (d == -1)
            sc.down();
    }
    sc.close_all();
    return sc.diagram();
}

}  // namespace boxball
