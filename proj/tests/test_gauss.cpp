#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "kpar/gauss.hpp"

using namespace kpar;

TEST_CASE("codec round trips") {
  for (const char* code : {"O1-O2-U1-U2-", "O1-O2-U1-O3+U2-U3+", "O1+/U1+",
                           "L:O1-O2+O3+U2+U1-U3+", "O1+U2+/U1+O2+"}) {
    GaussDiagram d = parse_gauss_code(code);
    CHECK(emit_gauss_code(d) == code);
    CHECK(emit_gauss_code(parse_gauss_code(emit_gauss_code(d))) == code);
  }
}

TEST_CASE("structure accessors") {
  GaussDiagram d = fix("2.1");
  CHECK(d.nchords() == 2);
  CHECK(d.ncomps() == 1);
  CHECK(d.narcs() == 4);
  CHECK(d.is_knot());
  CHECK(d.sign(1) == -1);
  CHECK(d.is_self(1));
  CHECK(d.pos(1, 'O') == 0);
  CHECK(d.pos(1, 'U') == 2);
  CHECK(d.arc_after(1, 'O') == 0);
  CHECK(d.arc_before(1, 'O') == 3);

  GaussDiagram h = fix("hopf_v");
  CHECK(h.ncomps() == 2);
  CHECK(!h.is_self(1));
  CHECK(h.narcs() == 2);

  GaussDiagram l = fix("long1");
  CHECK(l.long_knot);
  CHECK(l.base_arc() == l.narcs() - 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_gauss_code("O1+O1+U2+U2+"), ParseError);  // repeated role
  CHECK_THROWS_AS(parse_gauss_code("O1+U1+O2+"), ParseError);     // dangling chord
  CHECK_THROWS_AS(parse_gauss_code("O1U1"), ParseError);  // missing signs
  // the empty code is the bare circle
  GaussDiagram circle = parse_gauss_code("");
  CHECK(circle.nchords() == 0);
  CHECK(circle.narcs() == 1);
}

TEST_CASE("canonical code is rotation invariant") {
  GaussDiagram a = parse_gauss_code("O1-O2-U1-U2-");
  GaussDiagram b = parse_gauss_code("O2-U1-U2-O1-");  // rotated
  GaussDiagram c = parse_gauss_code("O5-O7-U5-U7-");  // renumbered
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) == canonical_code(c));
  CHECK(canonical_code(a) != canonical_code(fix("3.1")));
}

TEST_CASE("flatten and crossing switch") {
  GaussDiagram d = fix("2.1");
  GaussDiagram f = flatten(d);
  CHECK(f.flat);
  CHECK(f.nchords() == d.nchords());
  GaussDiagram s = switch_crossing(d, 1);
  CHECK(s.sign(1) == -d.sign(1));
  CHECK(s.pos(1, 'O') == d.pos(1, 'U'));
  CHECK(canonical_code(switch_crossing(s, 1)) == canonical_code(d));
}

TEST_CASE("corpus loading") {
  const auto& c = corpus();
  CHECK(c.size() >= 8);
  for (const std::string& n : knot_names()) CHECK(c.count(n) == 1);

  // malformed records are reported and skipped
  std::string tmp = "/tmp/kpar_test_corpus.tsv";
  {
    std::ofstream out(tmp);
    out << "# comment\n";
    out << "good\tO1-O2-U1-U2-\n";
    out << "no-tab-line\n";
    out << "bad\tO1-O2-\n";
  }
  std::vector<std::string> errors;
  auto m = load_corpus(tmp, &errors);
  CHECK(m.size() == 1);
  CHECK(errors.size() == 2);

  // duplicate names are an error
  {
    std::ofstream out(tmp);
    out << "a\tO1-O2-U1-U2-\n";
    out << "a\tO1-U1-\n";
  }
  CHECK_THROWS(load_corpus(tmp));
  std::remove(tmp.c_str());
}
