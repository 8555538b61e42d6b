#include <doctest.h>

#include "cls/specfile.hpp"
#include "cls/submodules.hpp"
#include "cls/expr.hpp"

using namespace cls;

TEST_CASE("specfile parsing") {
    SpecFile f = SpecFile::parse(
        "# comment\n"
        "[module]\n"
        "family = M\n"
        "a = 1/2\n"
        "note = \"quoted value\"\n"
        "\n"
        "[seed]\n"
        "element = \"(d+2)*x\"\n"
        "element = \"y\"\n");
    CHECK(f.has_section("module"));
    CHECK_FALSE(f.has_section("derivation"));
    CHECK(f.get("module", "family") == "M");
    CHECK(f.get("module", "note") == "quoted value");
    CHECK(f.get_or("module", "missing", "dflt") == "dflt");
    CHECK(f.get_all("seed", "element") == std::vector<std::string>{"(d+2)*x", "y"});
    CHECK_THROWS_AS(f.get("seed", "element"), Error);  // repeated key
    CHECK_THROWS_AS(f.get("module", "missing"), Error);

    CHECK_THROWS_AS(SpecFile::parse("[open\n"), Error);
    CHECK_THROWS_AS(SpecFile::parse("keyvalue\n"), Error);
    CHECK_THROWS_AS(SpecFile::parse("= value\n"), Error);
    CHECK_THROWS_AS(SpecFile::load("/nonexistent/file.spec"), Error);
}

TEST_CASE("parser survives garbage input with typed errors") {
    SplitMix64 rng(0x6A3B);
    const std::string alphabet = "dxyLGuvwabc0123456789+-*/^() ";
    for (int n = 0; n < 300; ++n) {
        std::string text;
        int len = rng.in_range(1, 24);
        for (int i = 0; i < len; ++i)
            text += alphabet[static_cast<size_t>(rng.in_range(0, static_cast<int>(alphabet.size()) - 1))];
        try {
            (void)parse_poly(text);
        } catch (const Error&) {
            // any typed library error is acceptable; crashes are not
        }
        try {
            (void)parse_module_element(text);
        } catch (const Error&) {
        }
        try {
            (void)parse_algebra_element(text);
        } catch (const Error&) {
        }
    }
}
