#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "revmine/corpus.hpp"

namespace revmine {

// Synthetic review corpus with controlled properties, used because no real
// rated-review dataset ships with the repo. With the default spec:
//   - 200 reviews: 50% positive (4-5 stars), 30% negative (1-2), 20% neutral (3);
//   - 6% are planted duplicates of earlier reviews (same rating, text equal
//     after whitespace/case normalization), so 188 unique reviews survive dedup;
//   - planted phrases, as fractions of a class's unique reviews:
//     "friendly staff" in 40% and "great pilot" in 30% of positive reviews,
//     "long wait" in 45% and "cancellation refund" in 25% of negative reviews.
// Same spec -> byte-identical output, on every platform.
struct FixtureSpec {
    int reviews = 200;
    std::uint64_t seed = 42;
};

std::vector<ReviewRecord> generate_fixture(const FixtureSpec& spec);

void write_fixture_csv(std::span<const ReviewRecord> records,
                       const std::filesystem::path& path);
void write_fixture_jsonl(std::span<const ReviewRecord> records,
                         const std::filesystem::path& path);

}  // namespace revmine
