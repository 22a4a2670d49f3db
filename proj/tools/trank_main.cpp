// Command-line front end: parses presentation files, runs the exact-arithmetic
// pipelines and emits deterministic JSON or text reports.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "trank/abelian.hpp"
#include "trank/errors.hpp"
#include "trank/json_io.hpp"
#include "trank/magnus.hpp"
#include "trank/novikov.hpp"
#include "trank/parser.hpp"
#include "trank/sigma.hpp"
#include "trank/version.hpp"

namespace {

using trank::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string file;
  std::string char_spec;
  std::string oracle = "free";
  std::string format = "json";
  int radius = 5;
  int height = 3;
  int max_tietze_passes = 100;
  std::size_t vertex_cap = 200000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open presentation file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

trank::OracleKind oracle_kind(const std::string& name) {
  if (name == "free") return trank::OracleKind::Free;
  if (name == "abelian") return trank::OracleKind::FreeAbelian;
  if (name == "dehn") return trank::OracleKind::Dehn;
  throw std::invalid_argument("unknown oracle '" + name + "' (use free|abelian|dehn)");
}

// Text rendering: a flat, indented walk over the same JSON payload.
void render_text(const Json& value, const std::string& indent, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [key, sub] : value.items()) {
      if (sub.is_object() || sub.is_array()) {
        out << indent << key << ":";
        if (sub.empty()) {
          out << (sub.is_array() ? " []" : " {}") << "\n";
        } else {
          out << "\n";
          render_text(sub, indent + "  ", out);
        }
      } else {
        out << indent << key << ": " << (sub.is_string() ? sub.get<std::string>() : sub.dump())
            << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& sub : value) {
      if (sub.is_object() || sub.is_array()) {
        out << indent << "-\n";
        render_text(sub, indent + "  ", out);
      } else {
        out << indent << "- " << (sub.is_string() ? sub.get<std::string>() : sub.dump()) << "\n";
      }
    }
  } else {
    out << indent << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

void emit(const Json& envelope, const Options& opt) {
  if (opt.format == "text") {
    render_text(envelope, "", std::cout);
  } else {
    std::cout << envelope.dump(2) << "\n";
  }
}

Json envelope_for(const std::string& command) {
  return Json{{"tool", trank::kToolName}, {"version", trank::kVersion}, {"command", command}};
}

struct LoadedInput {
  trank::Presentation presentation;
  trank::Character character;  // primitive; empty values when not requested
};

// Parses the file and (when given) the character spec, primitivising it. The
// echoed input section reflects the primitive representative.
LoadedInput load_input(const Options& opt, bool need_character, Json& envelope) {
  trank::Presentation p = trank::parse_presentation(read_file(opt.file));
  Json input{{"presentation", p.to_text()}};
  trank::Character c;
  if (need_character) {
    c = trank::parse_character_spec(p, opt.char_spec);
    if (c.is_zero()) throw std::invalid_argument("character must be nonzero");
    c = trank::primitive(c);
    input["character"] = trank::character_to_json(c, p.generators());
  }
  envelope["input"] = std::move(input);
  return LoadedInput{std::move(p), std::move(c)};
}

void finish(Json& envelope, Json result, Json heuristic_fields, const Options& opt) {
  envelope["result"] = std::move(result);
  envelope["meta"] = Json{{"heuristic_fields", std::move(heuristic_fields)}};
  emit(envelope, opt);
}

int cmd_abelianize(const Options& opt) {
  Json envelope = envelope_for("abelianize");
  const LoadedInput in = load_input(opt, false, envelope);
  const trank::AbelianGroup g = trank::abelianization(in.presentation);
  finish(envelope, trank::abelian_to_json(g), Json::array(), opt);
  return kExitOk;
}

int cmd_characters(const Options& opt) {
  Json envelope = envelope_for("characters");
  const LoadedInput in = load_input(opt, false, envelope);
  Json basis = Json::array();
  for (const trank::Character& c : trank::character_lattice(in.presentation))
    basis.push_back(trank::character_to_json(c, in.presentation.generators()));
  finish(envelope, Json{{"basis", std::move(basis)}}, Json::array(), opt);
  return kExitOk;
}

int cmd_rewrite(const Options& opt) {
  Json envelope = envelope_for("rewrite");
  const LoadedInput in = load_input(opt, true, envelope);
  const trank::FakeHnn raw = trank::magnus_rewrite(in.presentation, in.character);
  const trank::FakeHnn simplified = trank::tietze_simplify(raw, opt.max_tietze_passes);
  const trank::HnnData hnn = trank::hnn_data(simplified);
  Json result{{"raw", trank::fake_hnn_to_json(raw)},
              {"fake_hnn", trank::fake_hnn_to_json(simplified)},
              {"grank_upper", trank::grank_upper(simplified)},
              {"ascending", trank::to_string(trank::detect_ascending(simplified))},
              {"tietze_passes", simplified.tietze_passes},
              {"tietze_converged", simplified.tietze_converged},
              {"hnn", trank::hnn_to_json(hnn, in.presentation.generators())}};
  finish(envelope, std::move(result), Json::array(), opt);
  return kExitOk;
}

int cmd_rank_bounds(const Options& opt) {
  Json envelope = envelope_for("rank-bounds");
  const LoadedInput in = load_input(opt, true, envelope);
  const trank::RankBounds rb = trank::rank_bounds(in.presentation, in.character,
                                                  opt.max_tietze_passes);
  finish(envelope, trank::rank_bounds_to_json(rb), Json::array(), opt);
  return kExitOk;
}

int cmd_novikov_b1(const Options& opt) {
  Json envelope = envelope_for("novikov-b1");
  const LoadedInput in = load_input(opt, true, envelope);
  const trank::BoundaryMatrices bm = trank::boundary_matrices(in.presentation, in.character);
  const trank::NovikovCertificate cert =
      trank::novikov_b1_certificate(in.presentation, in.character);
  Json result = trank::novikov_certificate_to_json(cert);
  result["d1"] = trank::laurent_matrix_to_json(bm.d1);
  result["d2"] = trank::laurent_matrix_to_json(bm.d2);
  finish(envelope, std::move(result), Json::array(), opt);
  return kExitOk;
}

int cmd_sigma_ball(const Options& opt) {
  Json envelope = envelope_for("sigma-ball");
  const LoadedInput in = load_input(opt, true, envelope);
  const trank::Oracle oracle(oracle_kind(opt.oracle), in.presentation);
  const trank::SigmaBallReport report =
      trank::sigma_report(in.presentation, in.character, opt.radius, oracle, opt.vertex_cap);
  envelope["input"]["oracle"] = opt.oracle;
  envelope["result"] = trank::sigma_report_to_json(report, in.presentation.generators());
  envelope["meta"] =
      Json{{"heuristic_fields", Json::array({"result.verdict", "result.components",
                                             "result.identity_component", "result.witnesses"})},
           {"convention", "sublevel set is phi <= 0"}};
  emit(envelope, opt);
  return kExitOk;
}

int cmd_sphere_scan(const Options& opt, bool with_sigma) {
  Json envelope = envelope_for("sphere-scan");
  const LoadedInput in = load_input(opt, false, envelope);
  const trank::Presentation& p = in.presentation;
  envelope["input"]["height"] = opt.height;
  if (opt.height < 1) throw std::invalid_argument("height must be at least 1");

  // Primitive kernel vectors with max-norm <= height, both signs, in
  // lexicographic order. Primitive vectors have coprime entries, so every
  // row's character is automatically an epimorphism onto Z.
  const trank::IntMatrix rel = trank::relation_matrix(p);
  const std::size_t n = p.generator_count();
  std::vector<long long> v(n, -opt.height);
  Json rows = Json::array();
  bool done = false;
  while (!done) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    if (g == 1) {
      bool in_kernel = true;
      for (std::size_t r = 0; r < rel.rows() && in_kernel; ++r) {
        trank::BigInt sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += rel.at(r, i) * v[i];
        in_kernel = sum == 0;
      }
      if (in_kernel) {
        const trank::Character c{v};
        const trank::RankBounds rb = trank::rank_bounds(p, c, opt.max_tietze_passes);
        Json row{{"character", trank::character_to_json(c, p.generators())},
                 {"lower", rb.lower},
                 {"upper", rb.upper},
                 {"exact", rb.exact}};
        if (with_sigma) {
          const trank::Oracle oracle(oracle_kind(opt.oracle), p);
          const trank::SigmaBallReport rep =
              trank::sigma_report(p, c, opt.radius, oracle, opt.vertex_cap);
          row["sigma_verdict"] = trank::to_string(rep.verdict);
        }
        rows.push_back(std::move(row));
      }
    }
    // lexicographic successor
    done = true;
    for (std::size_t i = n; i-- > 0;) {
      if (v[i] < opt.height) {
        ++v[i];
        for (std::size_t j = i + 1; j < n; ++j) v[j] = -opt.height;
        done = false;
        break;
      }
    }
  }
  Json heuristics = Json::array();
  if (with_sigma) heuristics.push_back("result.rows[].sigma_verdict");
  finish(envelope, Json{{"rows", std::move(rows)}}, std::move(heuristics), opt);
  return kExitOk;
}

int report_error(const std::string& command, const Options& opt, const std::string& kind,
                 const std::string& message, int code, long long position = -1) {
  if (opt.format == "text") {
    std::cerr << "error: " << message << "\n";
  } else {
    Json envelope = envelope_for(command);
    Json error{{"kind", kind}, {"message", message}};
    if (position >= 0) error["position"] = position;
    envelope["error"] = std::move(error);
    std::cout << envelope.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rank bounds, HNN splitting data and Cayley-ball evidence for "
               "finitely presented groups with a map onto Z"};
  app.require_subcommand(1);

  Options opt;
  bool scan_with_sigma = false;

  const auto add_common = [&](CLI::App* sub, bool with_char) {
    sub->add_option("file", opt.file, "presentation file, e.g. \"<a, b | [a,b]>\"")
        ->required();
    sub->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    if (with_char) {
      sub->add_option("--char", opt.char_spec, "character, e.g. \"a=1,b=0\"")->required();
    }
    return sub;
  };

  add_common(app.add_subcommand("abelianize", "free rank and torsion of G/[G,G]"), false);
  add_common(app.add_subcommand("characters", "basis of the integral character lattice"), false);

  CLI::App* rewrite = add_common(
      app.add_subcommand("rewrite", "fake-HNN form, simplification and splitting data"), true);
  rewrite->add_option("--max-tietze-passes", opt.max_tietze_passes)->capture_default_str();

  CLI::App* rank = add_common(
      app.add_subcommand("rank-bounds", "certified lower and upper bounds for the rank"), true);
  rank->add_option("--max-tietze-passes", opt.max_tietze_passes)->capture_default_str();

  add_common(app.add_subcommand("novikov-b1", "first Novikov Betti number and boundary maps"),
             true);

  CLI::App* sigma = add_common(
      app.add_subcommand("sigma-ball", "connectivity evidence for the sub-level subgraph"), true);
  sigma->add_option("--radius", opt.radius)->capture_default_str();
  sigma->add_option("--oracle", opt.oracle, "free|abelian|dehn")->capture_default_str();
  sigma->add_option("--vertex-cap", opt.vertex_cap)->capture_default_str();

  CLI::App* scan = add_common(
      app.add_subcommand("sphere-scan", "rank bounds for all primitive characters up to a height"),
      false);
  scan->add_option("--height", opt.height)->capture_default_str();
  scan->add_option("--max-tietze-passes", opt.max_tietze_passes)->capture_default_str();
  scan->add_flag("--sigma", scan_with_sigma, "also gather Cayley-ball evidence per row");
  scan->add_option("--radius", opt.radius)->capture_default_str();
  scan->add_option("--oracle", opt.oracle, "free|abelian|dehn")->capture_default_str();
  scan->add_option("--vertex-cap", opt.vertex_cap)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "abelianize") return cmd_abelianize(opt);
    if (command == "characters") return cmd_characters(opt);
    if (command == "rewrite") return cmd_rewrite(opt);
    if (command == "rank-bounds") return cmd_rank_bounds(opt);
    if (command == "novikov-b1") return cmd_novikov_b1(opt);
    if (command == "sigma-ball") return cmd_sigma_ball(opt);
    if (command == "sphere-scan") return cmd_sphere_scan(opt, scan_with_sigma);
    std::cerr << "unknown command\n";
    return kExitInput;
  } catch (const trank::ParseError& e) {
    return report_error(command, opt, "parse-error", e.what(), kExitInput,
                        static_cast<long long>(e.position()));
  } catch (const trank::OracleError& e) {
    return report_error(command, opt, "no-applicable-oracle", e.what(), kExitInput);
  } catch (const trank::CapError& e) {
    return report_error(command, opt, "resource-cap", e.what(), kExitCap);
  } catch (const std::invalid_argument& e) {
    return report_error(command, opt, "invalid-input", e.what(), kExitInput);
  } catch (const std::exception& e) {
    return report_error(command, opt, "internal-error", e.what(), kExitInput);
  }
}
