#include "doctest.h"

#include "cma/text_io.hpp"

#include "testutil.hpp"

#include <fstream>
#include <stdexcept>

using namespace cma;

TEST_CASE("rational text round trips") {
    CHECK(parse_rational("  -3/16 ") == Rat(-3, 16));
    CHECK(parse_rational("7") == Rat(7));
    CHECK(format_rational(Rat(-3, 16)) == "-3/16");
    CHECK(format_rational(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("   "), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);

    cmatest::Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const Rat x = rng.rat();
        CHECK(parse_rational(format_rational(x)) == x);
    }
}

TEST_CASE("vector text round trips") {
    CHECK(parse_vector("4, 3, 2, 1") ==
          std::vector<Rat>{Rat(4), Rat(3), Rat(2), Rat(1)});
    /* newlines count as whitespace, so one entry per line works */
    CHECK(parse_vector("4,\n3,\n2,\n1") ==
          std::vector<Rat>{Rat(4), Rat(3), Rat(2), Rat(1)});
    CHECK(format_vector({Rat(4), Rat(3), Rat(2), Rat(1)}) == "4, 3, 2, 1");
    CHECK_THROWS_AS(parse_vector(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector("1, 2,"), std::invalid_argument);

    cmatest::Rng rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<Rat> v = rng.vec(rng.iuni(1, 8));
        CHECK(parse_vector(format_vector(v)) == v);
    }
}

TEST_CASE("matrix text round trips") {
    Mat m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(2);
    m.at(1, 0) = Rat(3);
    m.at(1, 1) = Rat(-4, 7);
    CHECK(format_matrix(m) == "1, 2;\n3, -4/7;");
    CHECK(parse_matrix("1, 2;\n3, -4/7;") == m);
    /* the trailing ';' on the final row is optional and blank segments
     * between ';' are skipped */
    CHECK(parse_matrix("1, 2; 3, -4/7") == m);
    CHECK(parse_matrix("1, 2;; 3, -4/7;\n") == m);
    CHECK_THROWS_AS(parse_matrix(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix(" ; ; "), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("1, 2; 3;"), std::invalid_argument);

    cmatest::Rng rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        const Mat a = rng.mat(rng.iuni(1, 6), rng.iuni(1, 6));
        CHECK(parse_matrix(format_matrix(a)) == a);
    }
}

TEST_CASE("file reading") {
    const std::string path = "/tmp/cma_text_io_case.txt";
    {
        std::ofstream out(path, std::ios::binary);
        out << "4, 3,\n2, 1";
    }
    CHECK(parse_vector(read_text_file(path)) ==
          std::vector<Rat>{Rat(4), Rat(3), Rat(2), Rat(1)});
    CHECK_THROWS_AS(read_text_file("/tmp/cma_no_such_file.txt"),
                    std::invalid_argument);
}
