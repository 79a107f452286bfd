#include "fence/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fence/core.hpp"
#include "fence/io.hpp"
#include "fence/legendrian.hpp"
#include "fence/moves.hpp"
#include "fence/oracles.hpp"
#include "fence/render.hpp"
#include "fence/search.hpp"

namespace fence::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotApplicable = 2;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FenceDiagram load_fence(const std::string& path) {
  return parse_fence(read_file(path));
}

void print_invariants(const FenceDiagram& f, std::ostream& out) {
  SurfaceSummary s = surface_summary(f);
  out << "chi=" << s.euler_characteristic << "\n";
  out << "components=" << s.boundary_components << "\n";
  out << "connected=" << (s.connected ? "true" : "false") << "\n";
  bool annulus = is_quasipositive_annulus(f);
  out << "annulus=" << (annulus ? "true" : "false") << "\n";
  if (!annulus) {
    return;
  }
  LegendrianInvariants inv = legendrian_invariants(f);
  out << "lk=" << linking_number(f) << "\n";
  out << "tb=" << inv.tb << "\n";
  out << "rot=" << inv.rot << "\n";
  out << "rot_abs=" << inv.rot_abs << "\n";
  out << "p=" << inv.positive_crossings << "\n";
  out << "n=" << inv.negative_crossings << "\n";
  out << "r_c=" << inv.right_cusps << "\n";
  out << "d_c=" << inv.down_cusps << "\n";
  out << "u_c=" << inv.up_cusps << "\n";
}

void print_reduced(const ReducedDiagram& r, std::ostream& out) {
  out << "strands " << r.diagram.strands << "\n";
  out << "bands";
  for (const Band& band : r.diagram.word) {
    out << " " << band.top << "-" << band.bottom;
  }
  out << "\n";
  for (const HorizontalSegment& h : r.lines) {
    out << "line y=" << h.y << " x=[" << h.x_min << "," << h.x_max << "]\n";
  }
  for (const VerticalSegment& v : r.bands) {
    out << "band x=" << v.x << " y=[" << v.y_min << "," << v.y_max << "]\n";
  }
  for (const Corner& corner : r.corners) {
    out << "corner x=" << corner.at.x << " y=" << corner.at.y << " "
        << to_string(corner.shape)
        << ((corner.shape == CornerShape::LT || corner.shape == CornerShape::RB)
                ? " cusp"
                : "")
        << "\n";
  }
  for (const Crossing& crossing : r.crossings) {
    out << "crossing x=" << crossing.at.x << " y=" << crossing.at.y
        << " band=" << crossing.band_index << " line=" << crossing.line_index << "\n";
  }
  for (const GridPoint& tv : r.trivalent_vertices) {
    out << "trivalent x=" << tv.x << " y=" << tv.y << "\n";
  }
  out << "curve_components " << r.component_count << "\n";
}

std::vector<std::uint8_t> parse_split(const std::string& spec) {
  std::vector<std::uint8_t> flags;
  if (spec == "-") {
    return flags;
  }
  for (char c : spec) {
    if (c == 'u') {
      flags.push_back(0);
    } else if (c == 'l') {
      flags.push_back(1);
    } else {
      throw UsageError("--split must be a string over {u,l}, got '" + spec + "'");
    }
  }
  return flags;
}

const char* move_error_name(MoveError error) {
  switch (error) {
    case MoveError::BadTarget:
      return "BadTarget";
    case MoveError::BadSplit:
      return "BadSplit";
    default:
      return "NotApplicable";
  }
}

int run_or_throw(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"quasipositive fence diagram calculus"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;

  auto* cmd_invariants = app.add_subcommand("invariants", "surface and Legendrian invariants");
  cmd_invariants->add_option("file", file)->required();

  auto* cmd_reduce = app.add_subcommand("reduce", "reduced fence diagram listing");
  cmd_reduce->add_option("file", file)->required();

  auto* cmd_move = app.add_subcommand("move", "apply one move");
  std::string kind;
  int at = 0;
  int line = 0;
  std::string target = "F1";
  std::string end = "front";
  std::string split = "-";
  cmd_move->add_option("--kind", kind)->required();
  cmd_move->add_option("--at", at);
  cmd_move->add_option("--line", line);
  cmd_move->add_option("--target", target);
  cmd_move->add_option("--end", end);
  cmd_move->add_option("--split", split);
  cmd_move->add_option("file", file)->required();

  auto* cmd_search = app.add_subcommand("search", "move equivalence search");
  int max_steps = SearchBudget{}.max_steps;
  int max_strands = SearchBudget{}.max_strands;
  int max_bands = SearchBudget{}.max_bands;
  std::uint64_t max_visited = SearchBudget{}.max_visited;
  cmd_search->add_option("a", file)->required();
  cmd_search->add_option("b", file2)->required();
  cmd_search->add_option("--max-steps", max_steps);
  cmd_search->add_option("--max-strands", max_strands);
  cmd_search->add_option("--max-bands", max_bands);
  cmd_search->add_option("--max-visited", max_visited);

  auto* cmd_enumerate = app.add_subcommand("enumerate", "stream band words");
  int strands = 0;
  int bands = 0;
  bool annulus_only = false;
  bool connected_only = false;
  cmd_enumerate->add_option("--strands", strands)->required();
  cmd_enumerate->add_option("--bands", bands)->required();
  cmd_enumerate->add_flag("--annulus", annulus_only);
  cmd_enumerate->add_flag("--connected", connected_only);

  auto* cmd_classify = app.add_subcommand("classify", "rot_abs classes at fixed lk");
  int lk_target = 0;
  cmd_classify->add_option("--lk", lk_target)->required();
  cmd_classify->add_option("--max-strands", max_strands);
  cmd_classify->add_option("--max-bands", max_bands);

  auto* cmd_oracle = app.add_subcommand("oracle", "independent checks");
  std::string check;
  cmd_oracle->add_option("--check", check)->required();
  cmd_oracle->add_option("file", file)->required();
  cmd_oracle->add_option("file2", file2);

  auto* cmd_render = app.add_subcommand("render", "ascii or svg drawing");
  std::string format = "ascii";
  bool cusped = false;
  cmd_render->add_option("--format", format);
  cmd_render->add_flag("--cusped", cusped);
  cmd_render->add_option("file", file)->required();

  auto* cmd_from_front = app.add_subcommand("from-front", "fence diagram of a front");
  cmd_from_front->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (cmd_invariants->parsed()) {
    print_invariants(load_fence(file), out);
    return kExitOk;
  }

  if (cmd_reduce->parsed()) {
    print_reduced(reduce(load_fence(file)), out);
    return kExitOk;
  }

  if (cmd_move->parsed()) {
    FenceDiagram f = load_fence(file);
    MoveInstance mi;
    if (kind == "slip") {
      mi = {MoveKind::Slip, at};
    } else if (kind == "slide") {
      mi = {MoveKind::Slide, at};
      if (target == "F1") {
        mi.target = SlideForm::F1;
      } else if (target == "F2") {
        mi.target = SlideForm::F2;
      } else if (target == "F3") {
        mi.target = SlideForm::F3;
      } else {
        throw UsageError("--target must be F1, F2 or F3");
      }
    } else if (kind == "inflate") {
      mi = MoveInstance{MoveKind::Inflate};
      mi.line = line;
      mi.at = at;
      mi.split = parse_split(split);
    } else if (kind == "deflate") {
      mi = MoveInstance{MoveKind::Deflate};
      mi.line = line;
    } else if (kind == "twirl") {
      mi = MoveInstance{MoveKind::Twirl};
      if (end == "front") {
        mi.end = TwirlEnd::Front;
      } else if (end == "back") {
        mi.end = TwirlEnd::Back;
      } else {
        throw UsageError("--end must be front or back");
      }
    } else if (kind == "turn") {
      mi = MoveInstance{MoveKind::Turn};
    } else {
      throw UsageError("unknown move kind '" + kind + "'");
    }
    MoveResult result = apply_move(f, mi);
    if (!result.ok) {
      out << move_error_name(result.error) << "\n";
      return kExitNotApplicable;
    }
    out << serialize_fence(result.diagram);
    return kExitOk;
  }

  if (cmd_search->parsed()) {
    FenceDiagram a = load_fence(file);
    FenceDiagram b = load_fence(file2);
    SearchBudget budget;
    budget.max_steps = max_steps;
    budget.max_strands = max_strands;
    budget.max_bands = max_bands;
    budget.max_visited = max_visited;
    SearchResult result = bfs_equivalence(a, b, budget);
    switch (result.verdict) {
      case Verdict::Related:
        out << "verdict=Related\n";
        for (const MoveInstance& mi : result.path) {
          out << "move " << to_string(mi) << "\n";
        }
        break;
      case Verdict::NotRelatedByInvariant:
        out << "verdict=NotRelatedByInvariant(" << result.invariant_name << ")\n";
        break;
      case Verdict::Unknown:
        out << "verdict=Unknown\n";
        break;
    }
    return kExitOk;
  }

  if (cmd_enumerate->parsed()) {
    enumerate_diagrams(
        strands, bands,
        [&](const FenceDiagram& f) {
          if (annulus_only) {
            return is_quasipositive_annulus(f);
          }
          if (connected_only) {
            return surface_summary(f).connected;
          }
          return true;
        },
        [&](const FenceDiagram& f) { out << serialize_fence(f); });
    return kExitOk;
  }

  if (cmd_classify->parsed()) {
    SearchBudget budget;
    budget.max_strands = max_strands;
    budget.max_bands = max_bands;
    ClassifyResult result = classify_annuli(lk_target, budget);
    for (const AnnulusClass& cls : result.classes) {
      out << "rot_abs=" << cls.rot_abs << " tb=" << cls.tb << " population="
          << cls.population << " representative=";
      out << cls.representative.strands << ":";
      for (std::size_t i = 0; i < cls.representative.word.size(); ++i) {
        if (i > 0) {
          out << ",";
        }
        out << cls.representative.word[i].top << "-"
            << cls.representative.word[i].bottom;
      }
      out << "\n";
    }
    return kExitOk;
  }

  if (cmd_oracle->parsed()) {
    FenceDiagram f = load_fence(file);
    if (check == "lk") {
      if (!is_quasipositive_annulus(f)) {
        throw PreconditionError("NotAnnulus");
      }
      out << "lk=" << linking_number(f) << "\n";
      return kExitOk;
    }
    if (check == "bracket") {
      BraidWord w = expand_band_word(f);
      out << "bracket=" << kauffman_bracket(w).to_string() << "\n";
      out << "normalized=" << normalized_bracket(w).to_string() << "\n";
      return kExitOk;
    }
    if (check == "gate") {
      if (file2.empty()) {
        throw UsageError("oracle --check gate needs two files");
      }
      FenceDiagram g = load_fence(file2);
      SurfaceSummary sf = surface_summary(f);
      SurfaceSummary sg = surface_summary(g);
      std::string failed;
      if (sf.euler_characteristic != sg.euler_characteristic) {
        failed = "chi";
      } else if (sf.boundary_components != sg.boundary_components) {
        failed = "components";
      } else if (sf.connected != sg.connected) {
        failed = "connected";
      } else {
        BraidWord wf = expand_band_word(f);
        BraidWord wg = expand_band_word(g);
        if (static_cast<int>(wf.letters.size()) <= kDefaultCrossingBound &&
            static_cast<int>(wg.letters.size()) <= kDefaultCrossingBound &&
            !(normalized_bracket(wf) == normalized_bracket(wg))) {
          failed = "bracket";
        } else if (is_quasipositive_annulus(f) && is_quasipositive_annulus(g) &&
                   linking_number(f) != linking_number(g)) {
          failed = "lk";
        }
      }
      if (failed.empty()) {
        out << "gate=pass\n";
      } else {
        out << "gate=fail(" << failed << ")\n";
      }
      return kExitOk;
    }
    throw UsageError("--check must be lk, bracket or gate");
  }

  if (cmd_render->parsed()) {
    FenceDiagram f = load_fence(file);
    if (format == "ascii") {
      out << (cusped ? render_ascii_reduced(reduce(f), true) : render_ascii(f));
    } else if (format == "svg") {
      out << (cusped ? render_svg_reduced(reduce(f), true) : render_svg(f));
    } else {
      throw UsageError("--format must be ascii or svg");
    }
    return kExitOk;
  }

  if (cmd_from_front->parsed()) {
    RectilinearFront front = parse_front(read_file(file));
    out << serialize_fence(fence_from_front(front));
    return kExitOk;
  }

  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_or_throw(args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotAnnulusError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const NotConnectedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const InvalidFrontError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const TooLargeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fence::cli
