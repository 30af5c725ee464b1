#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/rep.hpp"

using namespace serre;

namespace {

Algebra from_text(const std::string& text) {
    Presentation p = parse_presentation(text);
    return validate(p.quiver, p.relations);
}

const char* kO0 =
    "vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation 1 a*b = 0\n";

}  // namespace

TEST_CASE("presentation text format accepts comments and blank lines") {
    Algebra a = from_text(
        "# two vertices, one loop pair\n"
        "vertex 1\n"
        "\n"
        "vertex 2\n"
        "arrow a: 1 -> 2   # down\n"
        "arrow b: 2 -> 1\n"
        "relation 1 a*b = 0\n");
    CHECK(a.dimension() == 5);
}

TEST_CASE("relations accept rational coefficients and multiple terms") {
    Algebra a = from_text(
        "vertex 1\n"
        "arrow x: 1 -> 1\n"
        "arrow y: 1 -> 1\n"
        "relation 1/2 x*x -1/2 y*y = 0\n"
        "relation 1 x*y = 0\n"
        "relation 1 y*x = 0\n"
        "relation 1 x*x*x = 0\n");
    CHECK(a.dimension() > 0);
}

TEST_CASE("presentation parse errors carry line positions") {
    CHECK_THROWS_WITH_AS(parse_presentation(""), "empty presentation",
                         InputError);
    CHECK_THROWS_AS(parse_presentation("vertex\n"), InputError);
    CHECK_THROWS_AS(parse_presentation("vertex 1\narrow a 1 -> 1\n"),
                    InputError);
    CHECK_THROWS_AS(parse_presentation("vertex 1\narrow a: 1 -> 9\n"),
                    InputError);
    CHECK_THROWS_AS(
        parse_presentation("vertex 1\narrow a: 1 -> 1\nrelation q a*a = 0\n"),
        InputError);
    CHECK_THROWS_AS(
        parse_presentation("vertex 1\narrow a: 1 -> 1\nrelation 1 a*z = 0\n"),
        InputError);
    CHECK_THROWS_AS(parse_presentation("frobnicate 1\n"), InputError);
    CHECK_THROWS_AS(
        parse_presentation("vertex 1\narrow a: 1 -> 1\nrelation 1 a*a\n"),
        InputError);
}

TEST_CASE("printed presentations parse back to themselves") {
    Presentation p = parse_presentation(kO0);
    std::string text = print_presentation(p.quiver, p.relations);
    Presentation q = parse_presentation(text);
    CHECK(print_presentation(q.quiver, q.relations) == text);
}

TEST_CASE("representation format round-trips and validates") {
    Algebra a = from_text(kO0);
    Representation p = projective(a, 0);
    std::string text = print_representation(p);
    Representation q = parse_representation(a, text);
    CHECK(q.dims == p.dims);
    for (size_t i = 0; i < p.arrow.size(); ++i) CHECK(q.arrow[i] == p.arrow[i]);
}

TEST_CASE("representation parse errors") {
    Algebra a = from_text(kO0);
    CHECK_THROWS_AS(parse_representation(a, "dim 1 1\n"), InputError);
    CHECK_THROWS_AS(parse_representation(a, "dim 1 1\ndim 9 1\n"), InputError);
    CHECK_THROWS_AS(parse_representation(a, "dim 1 -3\ndim 2 1\n"), InputError);
    CHECK_THROWS_AS(
        parse_representation(a, "dim 1 1\ndim 2 1\nmap a 1 2 3\n"), InputError);
    CHECK_THROWS_AS(parse_representation(a, "dim 1 1\ndim 2 1\nmap a q\n"),
                    InputError);
    CHECK_THROWS_AS(parse_representation(a, "wibble\n"), InputError);
    // a zero map on every arrow violates no axiom
    Representation z = parse_representation(a, "dim 1 0\ndim 2 0\n");
    CHECK(z.is_zero());
}

TEST_CASE("representations violating a relation are rejected") {
    Algebra a = from_text(kO0);
    // one-dimensional everywhere with both arrows the identity: a*b != 0
    CHECK_THROWS_AS(
        parse_representation(a, "dim 1 1\ndim 2 1\nmap a 1\nmap b 1\n"),
        InputError);
}

TEST_CASE("DOT export lists every vertex and arrow") {
    Presentation p = parse_presentation(kO0);
    std::string dot = to_dot(p.quiver);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"2\" [label=\"a\"]") != std::string::npos);
    Quiver back = quiver_from_dot(dot);
    CHECK(back.same_shape(p.quiver));
}
