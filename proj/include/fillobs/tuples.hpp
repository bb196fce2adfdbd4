#pragma once
#include <string>
#include <vector>

namespace fillobs {

// Nondecreasing list of positive cohomological degrees; order is irrelevant
// to vanishing by graded commutativity, so this is the canonical form.
struct DegreeTuple {
    std::vector<int> indices;

    int sum() const;
    std::string to_string() const; // "(1,1,2)"
    bool operator==(const DegreeTuple&) const = default;
};

DegreeTuple make_tuple(std::vector<int> indices); // validates and sorts

// All nondecreasing tuples with entries in [1, max_index] and sum in
// [min_sum, max_sum], enumerated in lexicographic order of (sum, tuple).
struct TupleFamily {
    int max_index = 1;
    int min_sum = 1;
    int max_sum = 1;

    std::string to_string() const; // "indices in [1,2], sum in [3,5]"
};

std::vector<DegreeTuple> enumerate_tuples(const TupleFamily& f);

} // namespace fillobs
