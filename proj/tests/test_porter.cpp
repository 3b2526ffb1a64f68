#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "revmine/porter.hpp"

using revmine::porter_stem;

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("porter: classic pairs") {
    CHECK(porter_stem("caresses") == "caress");
    CHECK(porter_stem("ponies") == "poni");
    CHECK(porter_stem("ties") == "ti");
    CHECK(porter_stem("cats") == "cat");
    CHECK(porter_stem("feed") == "feed");
    CHECK(porter_stem("agreed") == "agre");
    CHECK(porter_stem("plastered") == "plaster");
    CHECK(porter_stem("motoring") == "motor");
    CHECK(porter_stem("hopping") == "hop");
    CHECK(porter_stem("filing") == "file");
    CHECK(porter_stem("happy") == "happi");
    CHECK(porter_stem("relational") == "relat");
    CHECK(porter_stem("rational") == "ration");
    CHECK(porter_stem("generalization") == "gener");
    CHECK(porter_stem("oscillators") == "oscil");
    CHECK(porter_stem("controlled") == "control");
}

TEST_CASE("porter: y handling follows the published consonant rule") {
    // y after a consonant-only prefix stays y
    CHECK(porter_stem("sky") == "sky");
    CHECK(porter_stem("fly") == "fly");
    CHECK(porter_stem("flying") == "fly");
    CHECK(porter_stem("trying") == "try");
    // y after a vowel-bearing stem becomes i
    CHECK(porter_stem("happy") == "happi");
    CHECK(porter_stem("toy") == "toi");
    CHECK(porter_stem("enjoy") == "enjoi");
    CHECK(porter_stem("syzygy") == "syzygi");
}

TEST_CASE("porter: review-domain words") {
    CHECK(porter_stem("friendly") == "friendli");
    CHECK(porter_stem("staff") == "staff");
    CHECK(porter_stem("waiting") == "wait");
    CHECK(porter_stem("cancellation") == "cancel");
    CHECK(porter_stem("visibility") == "visibl");
    CHECK(porter_stem("visible") == "visibl");
    CHECK(porter_stem("safety") == "safeti");
    CHECK(porter_stem("maintenance") == "mainten");
}

TEST_CASE("porter: tiny and degenerate inputs") {
    CHECK(porter_stem("") == "");
    CHECK(porter_stem("a") == "a");
    CHECK(porter_stem("i") == "i");
    CHECK(porter_stem("as") == "a");
    CHECK(porter_stem("is") == "i");
    // the one input the published rules map to the empty string
    CHECK(porter_stem("s") == "");
    // non-ASCII tokens pass through untouched
    CHECK(porter_stem("cafés") == "cafés");
}

TEST_CASE("porter: reference vocabulary matches on every entry") {
    const std::filesystem::path dir =
        std::filesystem::path(REVMINE_SOURCE_DIR) / "tests" / "fixtures" / "porter";
    const auto voc = read_lines(dir / "voc.txt");
    const auto expected = read_lines(dir / "output.txt");
    REQUIRE(voc.size() == expected.size());
    REQUIRE(voc.size() > 20000);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < voc.size(); ++i) {
        if (porter_stem(voc[i]) != expected[i]) {
            ++mismatches;
            if (mismatches <= 5)
                FAIL_CHECK(voc[i] << " -> " << porter_stem(voc[i]) << ", expected "
                                  << expected[i]);
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("porter: a stem is never longer than its input") {
    const std::filesystem::path dir =
        std::filesystem::path(REVMINE_SOURCE_DIR) / "tests" / "fixtures" / "porter";
    for (const std::string& word : read_lines(dir / "voc.txt"))
        CHECK(porter_stem(word).size() <= word.size());
}
