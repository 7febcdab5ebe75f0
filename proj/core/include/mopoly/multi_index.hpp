#pragma once

#include <string>
#include <vector>

namespace mopoly {

class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);

    // Nearly diagonal index of total degree n for r weights:
    // the first n mod r entries get one extra condition.
    static MultiIndex stepline(int r, int n);

    int r() const noexcept { return static_cast<int>(entries_.size()); }
    int operator[](int j) const { return entries_.at(static_cast<std::size_t>(j)); }
    int length() const noexcept;
    const std::vector<int>& entries() const noexcept { return entries_; }

    MultiIndex plus_unit(int j) const;
    bool is_stepline() const noexcept;

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

}  // namespace mopoly
