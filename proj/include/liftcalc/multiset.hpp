#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

namespace liftcalc {

/// Finite multiset over an ordered type. Iteration is in sorted order.
template <class T>
class Multiset {
public:
    using map_type = std::map<T, std::size_t>;
    using const_iterator = typename map_type::const_iterator;

    Multiset() = default;
    Multiset(std::initializer_list<T> xs) {
        for (const auto& x : xs) insert(x);
    }
    template <class It>
    Multiset(It first, It last) {
        for (; first != last; ++first) insert(*first);
    }

    void insert(const T& x, std::size_t k = 1) {
        if (k) counts_[x] += k;
    }
    /// Removes one copy; returns false when x is absent.
    bool erase_one(const T& x) {
        auto it = counts_.find(x);
        if (it == counts_.end()) return false;
        if (--it->second == 0) counts_.erase(it);
        return true;
    }
    void erase_all(const T& x) { counts_.erase(x); }

    std::size_t count(const T& x) const {
        auto it = counts_.find(x);
        return it == counts_.end() ? 0 : it->second;
    }
    bool contains(const T& x) const { return counts_.count(x) != 0; }
    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& [_, k] : counts_) n += k;
        return n;
    }
    std::size_t distinct() const { return counts_.size(); }
    bool empty() const { return counts_.empty(); }

    Multiset& operator+=(const Multiset& o) {
        for (const auto& [x, k] : o.counts_) counts_[x] += k;
        return *this;
    }
    friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }

    /// Sorted expansion with repetitions.
    std::vector<T> elements() const {
        std::vector<T> out;
        for (const auto& [x, k] : counts_)
            for (std::size_t i = 0; i < k; ++i) out.push_back(x);
        return out;
    }

    template <class F>
    auto map(F f) const {
        Multiset<decltype(f(std::declval<const T&>()))> out;
        for (const auto& [x, k] : counts_) out.insert(f(x), k);
        return out;
    }

    const_iterator begin() const { return counts_.begin(); }
    const_iterator end() const { return counts_.end(); }

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend auto operator<=>(const Multiset& a, const Multiset& b) { return a.counts_ <=> b.counts_; }

private:
    map_type counts_;
};

} // namespace liftcalc
