#include "fillobs/tuples.hpp"

#include <algorithm>
#include <numeric>

#include "fillobs/error.hpp"

namespace fillobs {

int DegreeTuple::sum() const { return std::accumulate(indices.begin(), indices.end(), 0); }

std::string DegreeTuple::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(indices[i]);
    }
    return s + ")";
}

DegreeTuple make_tuple(std::vector<int> indices) {
    if (indices.empty()) fail(ErrorKind::ParamRange, "degree tuple must be nonempty");
    for (int i : indices)
        if (i < 1) fail(ErrorKind::ParamRange, "degree tuple entries must be >= 1");
    std::sort(indices.begin(), indices.end());
    return {std::move(indices)};
}

std::string TupleFamily::to_string() const {
    return "indices in [1," + std::to_string(max_index) + "], sum in [" +
           std::to_string(min_sum) + "," + std::to_string(max_sum) + "]";
}

namespace {

void extend(int remaining, int min_part, int max_index, std::vector<int>& prefix,
            std::vector<DegreeTuple>& out) {
    if (remaining == 0) {
        if (!prefix.empty()) out.push_back({prefix});
        return;
    }
    for (int part = min_part; part <= std::min(max_index, remaining); ++part) {
        prefix.push_back(part);
        extend(remaining - part, part, max_index, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<DegreeTuple> enumerate_tuples(const TupleFamily& f) {
    if (f.max_index < 1) fail(ErrorKind::ParamRange, "max_index must be >= 1");
    if (f.min_sum < 1) fail(ErrorKind::ParamRange, "min_sum must be >= 1");
    std::vector<DegreeTuple> out;
    std::vector<int> prefix;
    for (int s = f.min_sum; s <= f.max_sum; ++s) extend(s, 1, f.max_index, prefix, out);
    return out;
}

} // namespace fillobs
