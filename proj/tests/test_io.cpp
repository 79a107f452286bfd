#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fence/cli.hpp"
#include "fence/core.hpp"
#include "fence/io.hpp"
#include "fence/legendrian.hpp"
#include "fence/render.hpp"

using namespace fence;

namespace {

FenceDiagram make(int strands, std::vector<Band> word) {
  FenceDiagram f;
  f.strands = strands;
  f.word = std::move(word);
  return f;
}

struct TempFile {
  std::filesystem::path path;

  TempFile(const std::string& name, const std::string& content) {
    path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun result;
  result.status = cli::run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace

TEST_CASE("fence files round-trip") {
  std::string canonical = "fence 1\nstrands 2\nbands 1-2 1-2\n";
  FenceDiagram f = parse_fence(canonical);
  CHECK(f == make(2, {{1, 2}, {1, 2}}));
  CHECK(serialize_fence(f) == canonical);

  FenceDiagram empty = parse_fence("fence 1\nstrands 3\nbands\n");
  CHECK(empty == make(3, {}));
  CHECK(parse_fence(serialize_fence(empty)) == empty);

  FenceDiagram commented = parse_fence(
      "# a diagram\nfence 1\n\nstrands 4  # four lines\nbands 1-4 2-3\n");
  CHECK(commented == make(4, {{1, 4}, {2, 3}}));
}

TEST_CASE("fence parse errors carry positions") {
  CHECK_THROWS_AS(parse_fence("fence 2\nstrands 2\nbands\n"), ParseError);
  CHECK_THROWS_AS(parse_fence("fence 1\nstrands 2\nbands 2-2\n"), RangeError);
  CHECK_THROWS_AS(parse_fence("fence 1\nstrands 2\nbands 1-3\n"), RangeError);
  CHECK_THROWS_AS(parse_fence("fence 1\nstrands 2\nbands 0-2\n"), RangeError);
  CHECK_THROWS_AS(parse_fence("fence 1\nstrands 2\nbands x-2\n"), ParseError);
  try {
    parse_fence("fence 1\nstrands two\nbands\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("front files round-trip") {
  std::string text =
      "front 1\nsegments\nH 1 1 2\nV 2 1 2\nH 2 2 1\nV 1 2 1\n";
  RectilinearFront front = parse_front(text);
  CHECK(front.segments.size() == 4);
  CHECK(serialize_front(front) == text);
  CHECK(fence_from_front(front) == make(2, {{1, 2}, {1, 2}}));
}

TEST_CASE("ascii render of the Hopf diagram") {
  std::string art = render_ascii(make(2, {{1, 2}, {1, 2}}));
  std::istringstream in(art);
  std::string line;
  int dash_rows = 0;
  std::vector<int> bar_columns;
  int row = 0;
  while (std::getline(in, line)) {
    if (line.find('-') != std::string::npos) {
      ++dash_rows;
    }
    for (std::size_t col = 0; col < line.size(); ++col) {
      if (line[col] == '|') {
        bar_columns.push_back(static_cast<int>(col));
      }
    }
    ++row;
  }
  CHECK(dash_rows == 2);
  std::sort(bar_columns.begin(), bar_columns.end());
  bar_columns.erase(std::unique(bar_columns.begin(), bar_columns.end()),
                    bar_columns.end());
  CHECK(bar_columns.size() == 2);
}

TEST_CASE("svg render is well-formed") {
  std::string svg = render_svg(make(3, {{1, 3}, {1, 2}, {2, 3}}));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t opens = 0;
  std::size_t self_closing = 0;
  for (std::size_t i = 0; i + 1 < svg.size(); ++i) {
    if (svg[i] == '<' && svg[i + 1] != '/') {
      ++opens;
    }
    if (svg[i] == '/' && svg[i + 1] == '>') {
      ++self_closing;
    }
  }
  std::size_t closes = 0;
  for (std::size_t pos = svg.find("</"); pos != std::string::npos;
       pos = svg.find("</", pos + 1)) {
    ++closes;
  }
  CHECK(opens == closes + self_closing);

  std::string cusped = render_svg_reduced(reduce(make(2, {{1, 2}, {1, 2}})), true);
  CHECK(cusped.find("Q") != std::string::npos);
}

TEST_CASE("cli invariants and oracle output") {
  TempFile hopf("qpfence_hopf.fence", "fence 1\nstrands 2\nbands 1-2 1-2\n");
  CliRun r = run_cli({"invariants", hopf.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("chi=0\n") != std::string::npos);
  CHECK(r.out.find("annulus=true\n") != std::string::npos);
  CHECK(r.out.find("lk=1\n") != std::string::npos);
  CHECK(r.out.find("tb=-1\n") != std::string::npos);
  CHECK(r.out.find("rot=0\n") != std::string::npos);

  r = run_cli({"oracle", "--check", "bracket", hopf.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("bracket=-A^4 - A^-4\n") != std::string::npos);

  TempFile disk("qpfence_disk.fence", "fence 1\nstrands 2\nbands 1-2\n");
  r = run_cli({"oracle", "--check", "lk", disk.path.string()});
  CHECK(r.status == 2);

  // Dropping a band is caught by the pairwise gate on chi.
  r = run_cli({"oracle", "--check", "gate", hopf.path.string(), disk.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "gate=fail(chi)\n");

  TempFile twirled("qpfence_twirled.fence", "fence 1\nstrands 3\nbands 1-2 2-3 1-3\n");
  TempFile e3("qpfence_e3.fence", "fence 1\nstrands 3\nbands 1-3 1-2 2-3\n");
  r = run_cli({"oracle", "--check", "gate", e3.path.string(), twirled.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "gate=pass\n");
}

TEST_CASE("cli move exit codes") {
  TempFile f("qpfence_pair.fence", "fence 1\nstrands 3\nbands 1-2 2-3\n");
  CliRun r = run_cli({"move", "--kind", "slip", "--at", "1", f.path.string()});
  CHECK(r.status == 2);
  CHECK(r.out == "NotApplicable\n");

  r = run_cli({"move", "--kind", "slide", "--at", "1", "--target", "F2",
               f.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "fence 1\nstrands 3\nbands 2-3 1-3\n");

  r = run_cli({"move", "--kind", "bogus", f.path.string()});
  CHECK(r.status == 1);

  TempFile hopf("qpfence_hopf3.fence", "fence 1\nstrands 2\nbands 1-2 1-2\n");
  r = run_cli({"move", "--kind", "inflate", "--line", "2", "--at", "2", "--split",
               "uu", hopf.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "fence 1\nstrands 3\nbands 1-2 1-2 2-3\n");

  r = run_cli({"move", "--kind", "inflate", "--line", "1", "--at", "1", "--split",
               "lu", hopf.path.string()});
  CHECK(r.status == 2);
  CHECK(r.out == "BadSplit\n");

  r = run_cli({"move", "--kind", "deflate", "--line", "1", hopf.path.string()});
  CHECK(r.status == 2);

  TempFile bad("qpfence_bad.fence", "fence 1\nstrands 2\nbands 2-2\n");
  r = run_cli({"invariants", bad.path.string()});
  CHECK(r.status == 1);
}

TEST_CASE("cli search verdict lines") {
  TempFile a("qpfence_a3l.fence",
             "fence 1\nstrands 6\nbands 2-6 1-2 1-3 4-6 4-5 3-5\n");
  TempFile b("qpfence_a3r.fence",
             "fence 1\nstrands 6\nbands 1-6 4-6 4-5 2-5 2-3 1-3\n");
  CliRun r = run_cli({"search", a.path.string(), b.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("verdict=NotRelatedByInvariant(rot_abs)") == 0);

  TempFile hopf("qpfence_hopf2.fence", "fence 1\nstrands 2\nbands 1-2 1-2\n");
  TempFile e("qpfence_e.fence", "fence 1\nstrands 3\nbands 1-3 1-2 2-3\n");
  r = run_cli({"search", e.path.string(), hopf.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("verdict=Related\n") == 0);
  CHECK(r.out.find("--kind deflate") != std::string::npos);
}

TEST_CASE("cli enumerate and from-front") {
  CliRun r = run_cli({"enumerate", "--strands", "2", "--bands", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "fence 1\nstrands 2\nbands 1-2 1-2\n");

  TempFile front("qpfence_rect.front",
                 "front 1\nsegments\nH 1 1 2\nV 2 1 2\nH 2 2 1\nV 1 2 1\n");
  r = run_cli({"from-front", front.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "fence 1\nstrands 2\nbands 1-2 1-2\n");

  TempFile badfront("qpfence_bad.front",
                    "front 1\nsegments\nH 1 1 2\nV 2 1 2\nH 1 2 1\nV 1 2 1\n");
  r = run_cli({"from-front", badfront.path.string()});
  CHECK(r.status == 2);
}

TEST_CASE("cli classify output") {
  CliRun r = run_cli({"classify", "--lk", "1", "--max-strands", "3",
                      "--max-bands", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("rot_abs=0 tb=-1") == 0);
}
