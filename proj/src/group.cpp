#include "sedf/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "sedf/error.hpp"

namespace sedf {

Group::Group(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw Error(ErrorKind::InvalidGroup, "group needs at least one cyclic factor");
    }
    std::uint64_t order = 1;
    std::uint64_t exponent = 1;
    for (auto f : factors_) {
        if (f < 2) {
            throw Error(ErrorKind::InvalidGroup,
                        "cyclic factor " + std::to_string(f) + " is less than 2");
        }
        order *= f;
        exponent = std::lcm(exponent, std::uint64_t{f});
        if (order > std::numeric_limits<Rank>::max()) {
            throw Error(ErrorKind::InvalidGroup, "group order exceeds 32-bit rank range");
        }
    }
    order_ = static_cast<std::uint32_t>(order);
    exponent_ = static_cast<std::uint32_t>(exponent);

    weights_.assign(factors_.size(), 1);
    for (std::size_t t = factors_.size() - 1; t > 0; --t) {
        weights_[t - 1] = weights_[t] * factors_[t];
    }
}

void Group::check(const GroupElement& g) const {
    if (g.coords.size() != factors_.size()) {
        throw Error(ErrorKind::InvalidElement, "element has " + std::to_string(g.coords.size()) +
                                                   " coordinates, group has " +
                                                   std::to_string(factors_.size()) + " factors");
    }
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        if (g.coords[t] >= factors_[t]) {
            throw Error(ErrorKind::InvalidElement,
                        "coordinate " + std::to_string(t) + " out of range");
        }
    }
}

Rank Group::rank(const GroupElement& g) const {
    check(g);
    Rank r = 0;
    for (std::size_t t = 0; t < factors_.size(); ++t) r += g.coords[t] * weights_[t];
    return r;
}

GroupElement Group::unrank(Rank r) const {
    if (r >= order_) throw Error(ErrorKind::InvalidElement, "rank out of range");
    GroupElement g;
    g.coords.resize(factors_.size());
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        g.coords[t] = r / weights_[t];
        r %= weights_[t];
    }
    return g;
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement out;
    out.coords.resize(factors_.size());
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        out.coords[t] = (a.coords[t] + b.coords[t]) % factors_[t];
    }
    return out;
}

GroupElement Group::neg(const GroupElement& a) const {
    check(a);
    GroupElement out;
    out.coords.resize(factors_.size());
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        out.coords[t] = (factors_[t] - a.coords[t]) % factors_[t];
    }
    return out;
}

Rank Group::add(Rank a, Rank b) const noexcept {
    if (factors_.size() == 1) return static_cast<Rank>((std::uint64_t{a} + b) % order_);
    Rank out = 0;
    for (std::size_t t = factors_.size(); t-- > 0;) {
        const auto f = factors_[t];
        out += ((a % f + b % f) % f) * weights_[t];
        a /= f;
        b /= f;
    }
    return out;
}

Rank Group::sub(Rank a, Rank b) const noexcept {
    if (factors_.size() == 1) return a >= b ? a - b : a + (order_ - b);
    Rank out = 0;
    for (std::size_t t = factors_.size(); t-- > 0;) {
        const auto f = factors_[t];
        out += ((a % f + f - b % f) % f) * weights_[t];
        a /= f;
        b /= f;
    }
    return out;
}

Rank Group::neg(Rank a) const noexcept { return sub(0, a); }

Rank Group::scale(Rank a, std::uint32_t u) const noexcept {
    Rank out = 0;
    for (std::size_t t = factors_.size(); t-- > 0;) {
        const auto f = factors_[t];
        out += static_cast<Rank>((std::uint64_t{a % f} * (u % f)) % f) * weights_[t];
        a /= f;
    }
    return out;
}

GroupSet::GroupSet(const Group& g, std::vector<Rank> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= g.order()) {
        throw Error(ErrorKind::InvalidElement, "rank " + std::to_string(members_.back()) +
                                                   " outside group of order " +
                                                   std::to_string(g.order()));
    }
}

bool GroupSet::contains(Rank r) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), r);
}

GroupSet GroupSet::transform(const Group& g, std::uint32_t u, Rank shift) const {
    std::vector<Rank> image;
    image.reserve(members_.size());
    for (auto x : members_) image.push_back(g.add(g.scale(x, u), shift));
    return GroupSet(g, std::move(image));
}

Multiset::Multiset(const Group& g, std::vector<Count> counts) : counts_(std::move(counts)) {
    if (counts_.size() != g.order()) {
        throw Error(ErrorKind::Shape, "multiset length does not match group order");
    }
    if (std::any_of(counts_.begin(), counts_.end(), [](Count c) { return c < 0; })) {
        throw Error(ErrorKind::Shape, "multiset counts must be nonnegative");
    }
}

Multiset Multiset::of(const Group& g, const GroupSet& s, Count weight) {
    Multiset m(g);
    for (auto x : s) m.counts_[x] += weight;
    return m;
}

Count Multiset::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

Multiset& Multiset::operator+=(const Multiset& other) {
    if (other.counts_.size() != counts_.size()) {
        throw Error(ErrorKind::Shape, "multisets over different groups");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    return *this;
}

void accumulate_difference(const Group& g, const GroupSet& d1, const GroupSet& d2,
                           Multiset& acc) {
    for (auto a : d1) {
        for (auto b : d2) acc.add(g.sub(a, b));
    }
}

Multiset multiset_difference(const Group& g, const GroupSet& d1, const GroupSet& d2) {
    if (d1.empty() || d2.empty()) {
        throw Error(ErrorKind::EmptySet, "difference multiset needs nonempty sets");
    }
    Multiset out(g);
    accumulate_difference(g, d1, d2, out);
    return out;
}

std::optional<Count> multiset_constant_on_nonzero(const Group& g, const Multiset& m) {
    if (m.size() != g.order() || m[0] != 0) return std::nullopt;
    const Count lambda = m[1];
    for (Rank x = 2; x < g.order(); ++x) {
        if (m[x] != lambda) return std::nullopt;
    }
    return lambda;
}

}  // namespace sedf
