#include <doctest.h>

#include <sstream>

#include "wsnet/corpus.hpp"

using namespace wsnet;

namespace {

const char* kFig1 =
    "SVC α\n"
    "OP op1\n"
    "IN a\n"
    "IN b\n"
    "OUT d\n"
    "OP op2\n"
    "IN c\n"
    "IN b\n"
    "OUT e\n"
    "OUT f\n";

std::size_t error_line(const char* text) {
    try {
        parse_wsc(text);
    } catch (const CorpusError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_SUITE("corpus") {
    TEST_CASE("single operation with two inputs and one output") {
        auto c = parse_wsc("SVC α\nOP op1\nIN a\nIN b\nOUT d\n");
        REQUIRE(c.services().size() == 1);
        REQUIRE(c.operation_count() == 1);
        const auto& op = *c.operations().front();
        CHECK(op.service == "α");
        CHECK(op.name == "op1");
        CHECK(op.id == "op1");
        CHECK(op.inputs == std::vector<Parameter>{{"a", {}}, {"b", {}}});
        CHECK(op.outputs == std::vector<Parameter>{{"d", {}}});
    }

    TEST_CASE("empty text and comments give an empty corpus") {
        CHECK(parse_wsc("").services().empty());
        CHECK(parse_wsc("# nothing\n\n   \n").services().empty());
        CHECK(serialize_wsc(Corpus{}).empty());
    }

    TEST_CASE("round trip") {
        auto c = parse_wsc(kFig1);
        auto text = serialize_wsc(c);
        CHECK(parse_wsc(text) == c);
        CHECK(serialize_wsc(parse_wsc(text)) == text);

        auto annotated = parse_wsc("SVC s\nOP o\nIN isbn|http://o#ISBN\nOUT date|http://o#Date\nOUT plain\n");
        auto atext = serialize_wsc(annotated);
        CHECK(atext.find("IN isbn|http://o#ISBN\n") != std::string::npos);
        CHECK(parse_wsc(atext) == annotated);
    }

    TEST_CASE("CRLF input parses like LF") {
        CHECK(parse_wsc("SVC s\r\nOP o\r\nIN a\r\n") == parse_wsc("SVC s\nOP o\nIN a\n"));
    }

    TEST_CASE("statistics") {
        auto s = corpus_stats(parse_wsc(kFig1));
        CHECK(s.services == 1);
        CHECK(s.operations == 2);
        CHECK(s.distinct_names == 6);
        CHECK(s.distinct_concepts == 0);
        CHECK(s.annotated_fraction == 0.0);

        auto empty = corpus_stats(Corpus{});
        CHECK(empty.services == 0);
        CHECK(empty.annotated_fraction == 0.0);

        auto full = corpus_stats(parse_wsc("SVC s\nOP o\nIN a|u:1\nOUT b|u:2\nOUT c|u:2\n"));
        CHECK(full.annotated_fraction == 1.0);
        CHECK(full.distinct_concepts == 2);
    }

    TEST_CASE("parameters are deduplicated by name and concept") {
        auto c = parse_wsc("SVC s\nOP o\nIN a\nIN a\nIN a|u:x\nOUT b\nOUT b\n");
        const auto& op = *c.operations().front();
        CHECK(op.inputs.size() == 2);
        CHECK(op.outputs.size() == 1);
    }

    TEST_CASE("errors carry line numbers") {
        CHECK(error_line("SVC s\nOP o\nOP o\n") == 3);
        CHECK(error_line("SVC s\nIN a\n") == 2);
        CHECK(error_line("SVC s\nOP o\nBOGUS x\n") == 3);
        CHECK(error_line("SVC s\nOP o\nIN a b\n") == 3);
        CHECK(error_line("SVC s\nSVC s\n") == 2);
        CHECK(error_line("SVC s\nOP o\nIN a|\n") == 3);
        CHECK(error_line("OP o\n") == 1);
    }

    TEST_CASE("operation names shared across services get qualified ids") {
        auto c = parse_wsc("SVC s1\nOP get\nIN a\nOP only\nSVC s2\nOP get\nOUT a\n");
        REQUIRE(c.operation_count() == 3);
        CHECK(c.operations()[0]->id == "s1/get");
        CHECK(c.operations()[1]->id == "only");
        CHECK(c.operations()[2]->id == "s2/get");
        CHECK(c.find_operation("s2/get") == c.operations()[2]);
        CHECK(c.find_operation("get") == nullptr);
    }

    TEST_CASE("copies own their operation index") {
        Corpus copy;
        {
            auto original = parse_wsc(kFig1);
            copy = original;
        }
        REQUIRE(copy.operation_count() == 2);
        CHECK(copy.operations()[1]->name == "op2");
        CHECK(copy.find_operation("op1")->outputs.front().name == "d");
    }

    TEST_CASE("stream overload") {
        std::istringstream in(kFig1);
        CHECK(parse_wsc(in) == parse_wsc(kFig1));
    }

    TEST_CASE("name validation") {
        CHECK(is_valid_name("α"));
        CHECK(is_valid_name("http://o#x"));
        CHECK_FALSE(is_valid_name(""));
        CHECK_FALSE(is_valid_name("a b"));
        CHECK_FALSE(is_valid_name("a\tb"));
        CHECK_THROWS_AS(Corpus({Service{"bad name", {}}}), CorpusError);
    }
}
