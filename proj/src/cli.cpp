#include "jung/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jung/decompose.hpp"
#include "jung/documents.hpp"
#include "jung/newton.hpp"
#include "jung/parse.hpp"
#include "jung/svg.hpp"
#include "jung/witness.hpp"

namespace jung::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reject travelling up to the exit-code mapping.
struct Rejected {
  RejectReason reason;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_source(const std::string& path, Streams& io) {
  std::ostringstream buf;
  if (path == "-") {
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void write_sink(const std::string& path, const std::string& text, Streams& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
  if (!file) throw IoError("write failed for '" + path + "'");
}

json read_json(const std::string& path, Streams& io) {
  const std::string text = read_source(path, io);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

json point(const Monomial& m) { return json::array({m.i, m.j}); }
json point(const Direction& d) { return json::array({d.rho(), d.sigma()}); }

json polygon_json(const BiPoly& p) {
  json vertices = json::array();
  for (const auto& m : hull(p).vertices) vertices.push_back(point(m));
  json dirs = json::array();
  json corners = json::array();
  for (const auto& d : directions(p)) {
    dirs.push_back(point(d));
    const Corners c = st_en(d, p);
    corners.push_back(json{{"direction", point(d)}, {"st", point(c.st)}, {"en", point(c.en)}});
  }
  return json{{"vertices", vertices}, {"directions", dirs}, {"corners", corners}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Decompose automorphisms of Q[x,y] into elementary and linear factors"};
  app.require_subcommand(1);

  std::string pair_path, word_path, out_path, poly_text, svg_path;
  bool as_json = false;
  std::uint64_t seed = 0;
  int moves = 3, max_deg = 3, coeff_bound = 3;

  auto* decompose_cmd = app.add_subcommand("decompose", "Write a pair as a word of tame moves");
  decompose_cmd->add_option("--pair", pair_path, "PairDocument (JSON) or -")->required();
  decompose_cmd->add_option("--word-out", out_path, "Destination of the WordDocument");

  auto* verify_cmd = app.add_subcommand("verify", "Check that a word composes to a pair");
  verify_cmd->add_option("--pair", pair_path)->required();
  verify_cmd->add_option("--word", word_path)->required();

  auto* invert_cmd = app.add_subcommand("invert", "Write the inverse pair");
  invert_cmd->add_option("--pair", pair_path)->required();
  invert_cmd->add_option("--out", out_path);

  auto* compose_cmd = app.add_subcommand("compose", "Write the pair of a word");
  compose_cmd->add_option("--word", word_path)->required();
  compose_cmd->add_option("--out", out_path);

  auto* polygon_cmd = app.add_subcommand("polygon", "Newton polygon, Dir(P) and corners");
  polygon_cmd->add_option("--poly", poly_text, "Polynomial expression in x and y")->required();
  polygon_cmd->add_flag("--json", as_json, "JSON report on standard output (default)");
  polygon_cmd->add_option("--svg", svg_path, "Also draw the polygon to this SVG file");

  auto* random_cmd = app.add_subcommand("random", "Seeded random WordDocument");
  random_cmd->add_option("--seed", seed)->required();
  random_cmd->add_option("--moves", moves)->required()->check(CLI::NonNegativeNumber);
  random_cmd->add_option("--max-deg", max_deg)->required()->check(CLI::PositiveNumber);
  random_cmd->add_option("--coeff-bound", coeff_bound)->required()->check(CLI::PositiveNumber);
  random_cmd->add_option("--out", out_path);

  auto* bracket_cmd = app.add_subcommand("bracket", "Print the Jacobian bracket [P,Q]");
  bracket_cmd->add_option("--pair", pair_path)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "One degree-lowering elementary step on P");
  reduce_cmd->add_option("--poly", poly_text, "Polynomial expression in x and y")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kFormatError;
  }

  try {
    if (*decompose_cmd) {
      const AutoPair pair = pair_from_json(read_json(pair_path, io));
      auto result = decompose(pair);
      if (const auto* rej = std::get_if<Reject>(&result)) throw Rejected{rej->reason};
      write_sink(out_path, word_to_json(std::get<TameWord>(result)).dump(2) + "\n", io);
    } else if (*verify_cmd) {
      const AutoPair pair = pair_from_json(read_json(pair_path, io));
      const TameWord word = word_from_json(read_json(word_path, io));
      const bool ok = verify(word, pair);
      out << (ok ? "true" : "false") << "\n";
      if (!ok) {
        err << "Mismatch\n";
        return kRejected;
      }
    } else if (*invert_cmd) {
      const AutoPair pair = pair_from_json(read_json(pair_path, io));
      auto result = invert(pair);
      if (const auto* rej = std::get_if<Reject>(&result)) throw Rejected{rej->reason};
      write_sink(out_path, pair_to_json(std::get<AutoPair>(result)).dump(2) + "\n", io);
    } else if (*compose_cmd) {
      const TameWord word = word_from_json(read_json(word_path, io));
      write_sink(out_path, pair_to_json(word_to_pair(word)).dump(2) + "\n", io);
    } else if (*polygon_cmd) {
      const BiPoly p = parse_poly(poly_text);
      if (p.is_zero()) throw FormatError("the zero polynomial has no Newton polygon");
      if (!svg_path.empty()) write_sink(svg_path, newton_polygon_svg(p), io);
      if (as_json || svg_path != "-") out << polygon_json(p).dump(2) << "\n";
    } else if (*random_cmd) {
      const TameWord word = random_tame_word(seed, moves, max_deg, coeff_bound);
      write_sink(out_path, word_to_json(word).dump(2) + "\n", io);
    } else if (*bracket_cmd) {
      const AutoPair pair = pair_from_json(read_json(pair_path, io));
      out << to_string(bracket(pair.p, pair.q)) << "\n";
    } else if (*reduce_cmd) {
      const BiPoly p = parse_poly(poly_text);
      const LeadClass cls = classify_leading(p);
      const auto* axis = std::get_if<AxisX>(&cls);
      if (axis == nullptr || axis->a < 2 || p.is_monomial()) {
        throw FormatError("reduce needs a non-monomial P whose (1,1)-leading form is c*x^a, a >= 2");
      }
      auto result = reduction_step(p);
      if (const auto* rej = std::get_if<Reject>(&result)) throw Rejected{rej->reason};
      const auto& step = std::get<ReductionStep>(result);
      const json report{{"direction", point(step.direction)},
                        {"lambda", to_string(step.power.lambda)},
                        {"move", move_to_json(step.move)},
                        {"reduced", to_string(step.reduced)}};
      out << report.dump(2) << "\n";
    }
  } catch (const Rejected& r) {
    err << reason_name(r.reason) << "\n";
    return kRejected;
  } catch (const IoError& e) {
    err << "IoError: " << e.what() << "\n";
    return kIoError;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kFormatError;
  } catch (const FormatError& e) {
    err << "FormatError: " << e.what() << "\n";
    return kFormatError;
  } catch (const std::invalid_argument& e) {
    err << "FormatError: " << e.what() << "\n";
    return kFormatError;
  }
  return kSuccess;
}

}  // namespace jung::cli
