#include "boxball/config.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace boxball {

namespace {

constexpr std::int64_t kWordBits = 64;

std::int64_t word_index(std::int64_t box) { return (box - 1) / kWordBits; }
int bit_index(std::int64_t box) { return static_cast<int>((box - 1) % kWordBits); }

}  // namespace

BoxBallConfig BoxBallConfig::parse(std::string_view text) {
    BoxBallConfig cfg;
    cfg.words_.resize(text.size() / kWordBits + 1, 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '1') {
            cfg.words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
        } else if (c != '0') {
            throw std::invalid_argument("config parse error: non-binary character '" +
                                        std::string(1, c) + "' at position " +
                                        std::to_string(i + 1));
        }
    }
    cfg.shrink();
    return cfg;
}

BoxBallConfig BoxBallConfig::from_boxes(const std::vector<std::int64_t>& boxes) {
    BoxBallConfig cfg;
    for (const std::int64_t b : boxes) cfg.set(b);
    return cfg;
}

bool BoxBallConfig::occupied(std::int64_t box) const {
    if (box < 1) return false;
    const std::int64_t w = word_index(box);
    if (w >= static_cast<std::int64_t>(words_.size())) return false;
    return (words_[static_cast<std::size_t>(w)] >> bit_index(box)) & 1u;
}

void BoxBallConfig::set(std::int64_t box) {
    if (box < 1) throw std::invalid_argument("box indices are 1-based");
    const std::int64_t w = word_index(box);
    if (w >= static_cast<std::int64_t>(words_.size()))
        words_.resize(static_cast<std::size_t>(w) + 1, 0);
    words_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << bit_index(box);
}

std::int64_t BoxBallConfig::ball_count() const {
    std::int64_t m = 0;
    for (const std::uint64_t w : words_) m += std::popcount(w);
    return m;
}

std::int64_t BoxBallConfig::last_ball() const {
    for (std::int64_t w = static_cast<std::int64_t>(words_.size()) - 1; w >= 0; --w) {
        const std::uint64_t word = words_[static_cast<std::size_t>(w)];
        if (word != 0)
            return w * kWordBits + (kWordBits - std::countl_zero(word));
    }
    return 0;
}

std::vector<std::int64_t> BoxBallConfig::occupied_boxes() const {
    std::vector<std::int64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word != 0) {
            const int b = std::countr_zero(word);
            out.push_back(static_cast<std::int64_t>(w) * kWordBits + b + 1);
            word &= word - 1;
        }
    }
    return out;
}

std::string BoxBallConfig::to_string() const { return to_string(last_ball()); }

std::string BoxBallConfig::to_string(std::int64_t width) const {
    std::string s(static_cast<std::size_t>(std::max<std::int64_t>(width, 0)), '0');
    for (std::int64_t box = 1; box <= width; ++box)
        if (occupied(box)) s[static_cast<std::size_t>(box - 1)] = '1';
    return s;
}

bool BoxBallConfig::operator==(const BoxBallConfig& other) const {
    const std::size_t n = std::max(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t a = i < words_.size() ? words_[i] : 0;
        const std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
        if (a != b) return false;
    }
    return true;
}

BoxBallConfig BoxBallConfig::from_words(std::vector<std::uint64_t> words) {
    BoxBallConfig cfg;
    cfg.words_ = std::move(words);
    cfg.shrink();
    return cfg;
}

void BoxBallConfig::shrink() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BoxBallConfig carrier_update(const BoxBallConfig& cfg) {
    const std::vector<std::uint64_t>& in = cfg.words();
    BoxBallConfig out;
    if (in.empty()) return out;

    // The carrier holds `load` balls. An occupied box pushes, an empty box at
    // positive load pops into that box. Whole words short-circuit when the
    // load is deep enough that every bit flips.
    std::vector<std::uint64_t> res(in.size() + 2, 0);
    std::int64_t load = 0;
    for (std::size_t w = 0; w < in.size(); ++w) {
        const std::uint64_t x = in[w];
        if (x == 0 && load == 0) continue;
        if (x == ~std::uint64_t{0}) {
            load += kWordBits;
            continue;
        }
        if (load >= kWordBits) {
            res[w] = ~x;
            load += 2 * std::popcount(x) - kWordBits;
            continue;
        }
        std::uint64_t r = 0;
        for (int b = 0; b < kWordBits; ++b) {
            if ((x >> b) & 1u) {
                ++load;
            } else if (load > 0) {
                --load;
                r |= std::uint64_t{1} << b;
            }
        }
        res[w] = r;
    }
    // Drain the remaining load into the boxes after the stored prefix.
    std::size_t w = in.size();
    int b = 0;
    while (load > 0) {
        res[w] |= std::uint64_t{1} << b;
        --load;
        if (++b == kWordBits) {
            b = 0;
            if (++w >= res.size()) res.push_back(0);
        }
    }

    return BoxBallConfig::from_words(std::move(res));
}

BoxBallConfig carrier_update_reference(const BoxBallConfig& cfg) {
    const std::vector<std::int64_t> balls = cfg.occupied_boxes();
    BoxBallConfig out;
    std::vector<std::int64_t> placed;  // occupied boxes of the new configuration
    for (std::size_t i = 0; i < balls.size(); ++i) {
        std::int64_t target = balls[i] + 1;
        for (;;) {
            const bool unmoved = std::binary_search(balls.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                                    balls.end(), target);
            const bool moved = std::binary_search(placed.begin(), placed.end(), target);
            if (!unmoved && !moved) break;
            ++target;
        }
        placed.insert(std::lower_bound(placed.begin(), placed.end(), target), target);
    }
    for (const std::int64_t b : placed) out.set(b);
    return out;
}

BoxBallConfig evolve(BoxBallConfig cfg, std::int64_t sweeps) {
    if (sweeps < 0) throw std::invalid_argument("sweep count must be nonnegative");
    for (std::int64_t s = 0; s < sweeps; ++s) cfg = carrier_update(cfg);
    return cfg;
}

bool is_stable(const BoxBallConfig& cfg) {
    const std::vector<Soliton> runs = run_list(cfg);
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        if (runs[i].length > runs[i + 1].length) return false;
        const std::int64_t gap = runs[i + 1].start - (runs[i].start + runs[i].length);
        if (gap < runs[i].length) return false;
    }
    return true;
}

std::int64_t default_sweep_budget(std::int64_t ball_count) {
    return ball_count * ball_count + ball_count + 1;
}

StabilizeResult stabilize(const BoxBallConfig& cfg, std::int64_t max_sweeps) {
    if (max_sweeps <= 0) max_sweeps = default_sweep_budget(cfg.ball_count());
    StabilizeResult res{cfg, 0};
    while (!is_stable(res.config)) {
        if (res.sweeps >= max_sweeps)
            throw std::runtime_error("stabilize: sweep budget of " +
                                     std::to_string(max_sweeps) + " exhausted");
        res.config = carrier_update(res.config);
        ++res.sweeps;
    }
    return res;
}

std::vector<Soliton> run_list(const BoxBallConfig& cfg) {
    std::vector<Soliton> runs;
    const std::vector<std::int64_t> boxes = cfg.occupied_boxes();
    for (const std::int64_t b : boxes) {
        if (!runs.empty() && runs.back().start + runs.back().length == b)
            ++runs.back().length;
        else
            runs.push_back({b, 1});
    }
    return runs;
}

std::vector<std::int64_t> soliton_lengths(const BoxBallConfig& cfg) {
    if (!is_stable(cfg))
        throw std::invalid_argument("soliton_lengths requires a stable configuration");
    std::vector<std::int64_t> lengths;
    for (const Soliton& s : run_list(cfg)) lengths.push_back(s.length);
    return lengths;
}

}  // namespace boxball
