#include <algorithm>
#include <random>
#include <set>

#include "monoinv/harness.hpp"

namespace monoinv {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool chance(int percent) { return uniform(0, 99) < percent; }
    Rational rational(long num_lo, long num_hi, long den_max) {
        return make_rational(uniform(num_lo, num_hi), uniform(1, den_max));
    }

private:
    std::mt19937_64 eng_;
};

long bound_of(const GenConfig& cfg, long cap) {
    mpz_class b = cfg.value_bound.get_num() / cfg.value_bound.get_den();
    return b > cap ? cap : std::max(1L, b.get_si());
}

enum class Strategy { Free, Unimodal, Perturbed };

}  // namespace

void check_config(const GenConfig& cfg) {
    if (cfg.max_knots < 1) throw Error(ErrorKind::InvalidInterval, "max_knots must be at least 1");
    if (cfg.value_bound < 1) throw Error(ErrorKind::InvalidInterval, "value_bound must be at least 1");
}

GenConfig instance_config(const GenConfig& cfg, std::uint64_t index) {
    GenConfig out = cfg;
    out.seed = splitmix64(splitmix64(cfg.seed) ^ index);
    return out;
}

PiecewiseMonotone gen_monotone(const GenConfig& cfg) {
    check_config(cfg);
    Rng rng(cfg.seed);
    const long pos_bound = bound_of(cfg, 60);
    const long small_bound = bound_of(cfg, 12);

    long segments = rng.uniform(1, cfg.max_knots);
    std::set<Rational> points;
    for (int tries = 0; static_cast<long>(points.size()) < segments + 1; ++tries) {
        if (tries > 2000) {
            segments = static_cast<long>(points.size()) - 1;
            break;
        }
        points.insert(rng.rational(-pos_bound, pos_bound, 4));
    }
    std::vector<Rational> pts(points.begin(), points.end());
    pts.resize(static_cast<std::size_t>(segments + 1));

    bool infinite_lo = cfg.force_real_line || (cfg.allow_infinite_domain && rng.chance(50));
    bool infinite_hi = cfg.force_real_line || (cfg.allow_infinite_domain && rng.chance(50));
    ExtendedReal lo = infinite_lo ? ExtendedReal::neg_inf() : ExtendedReal(pts.front());
    ExtendedReal hi = infinite_hi ? ExtendedReal::pos_inf() : ExtendedReal(pts.back());
    std::vector<Rational> knots(pts.begin() + 1, pts.end() - 1);
    const auto n = static_cast<std::size_t>(segments);

    Strategy strategy = Strategy::Unimodal;
    if (!cfg.force_unimodal) {
        long pick = rng.uniform(0, 9);
        strategy = pick < 4 ? Strategy::Free : pick < 7 ? Strategy::Unimodal : Strategy::Perturbed;
    }

    auto slope = [&] {
        if (cfg.allow_flats && rng.chance(20)) return Rational(0);
        return rng.rational(1, small_bound, 4);
    };
    std::vector<Rational> slopes(n);
    std::vector<Rational> jumps(knots.size(), Rational(0));
    for (auto& s : slopes) s = slope();

    if (strategy == Strategy::Free) {
        for (auto& j : jumps)
            if (cfg.allow_jumps && rng.chance(30)) j = rng.rational(1, small_bound, 4);
    } else {
        auto mode = static_cast<std::size_t>(rng.uniform(0, segments));
        std::sort(slopes.begin(), slopes.begin() + static_cast<long>(mode));
        std::sort(slopes.begin() + static_cast<long>(mode), slopes.end(), std::greater<Rational>());
        if (cfg.allow_jumps && mode >= 1 && mode < n && rng.chance(50))
            jumps[mode - 1] = rng.rational(1, small_bound, 4);
        if (strategy == Strategy::Perturbed) {
            long kind = rng.uniform(0, 2);
            if (kind == 0 && cfg.allow_jumps && !jumps.empty())
                jumps[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(jumps.size()) - 1))] =
                    rng.rational(1, small_bound, 4);
            else if (kind == 1 && cfg.allow_flats)
                slopes[static_cast<std::size_t>(rng.uniform(0, segments - 1))] = 0;
            else
                std::swap(slopes[static_cast<std::size_t>(rng.uniform(0, segments - 1))],
                          slopes[static_cast<std::size_t>(rng.uniform(0, segments - 1))]);
        }
    }

    bool constant = std::all_of(slopes.begin(), slopes.end(), [](const Rational& s) { return s == 0; }) &&
                    std::all_of(jumps.begin(), jumps.end(), [](const Rational& j) { return j == 0; });
    if (constant) slopes[static_cast<std::size_t>(rng.uniform(0, segments - 1))] = rng.rational(1, small_bound, 4);

    // Value G(anchor+) at the first knot (or at 0 without knots).
    Rational start = rng.rational(-pos_bound, pos_bound, 4);
    std::vector<Affine> pieces;
    Rational anchor = knots.empty() ? Rational(0) : knots.front();
    pieces.push_back({slopes[0], start - slopes[0] * anchor});
    for (std::size_t i = 0; i < knots.size(); ++i) {
        Rational right = pieces.back().at(knots[i]) + jumps[i];
        pieces.push_back({slopes[i + 1], right - slopes[i + 1] * knots[i]});
    }
    return PiecewiseMonotone::from_pieces(lo, hi, std::move(knots), std::move(pieces));
}

}  // namespace monoinv
