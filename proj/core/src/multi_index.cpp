#include "mopoly/multi_index.hpp"

#include "mopoly/errors.hpp"

#include <numeric>

namespace mopoly {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) raise(ErrorCode::ParameterOutOfRange, "multi-index needs at least one entry");
    for (int e : entries_)
        if (e < 0) raise(ErrorCode::ParameterOutOfRange, "multi-index entries must be nonnegative");
}

MultiIndex MultiIndex::stepline(int r, int n) {
    if (r < 1 || n < 0) raise(ErrorCode::ParameterOutOfRange, "stepline index needs r >= 1 and n >= 0");
    std::vector<int> e(static_cast<std::size_t>(r), n / r);
    for (int j = 0; j < n % r; ++j) ++e[j];
    return MultiIndex(std::move(e));
}

int MultiIndex::length() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::plus_unit(int j) const {
    auto e = entries_;
    ++e.at(static_cast<std::size_t>(j));
    return MultiIndex(std::move(e));
}

bool MultiIndex::is_stepline() const noexcept {
    return *this == stepline(r(), length());
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

}  // namespace mopoly
