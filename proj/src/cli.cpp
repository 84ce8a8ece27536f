#include "proxyrep/cli.hpp"

#include "proxyrep/generators.hpp"
#include "proxyrep/io.hpp"
#include "proxyrep/render.hpp"
#include "proxyrep/unrestricted.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace proxyrep {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw ParseError("cannot open output file: " + out_path);
  file << text;
}

TieBreak parse_tiebreak(const std::string& name) {
  return name == "right" ? TieBreak::Right : TieBreak::Left;
}

// 2*(1/theta - 1) when 1/theta is integral, else 2*floor(1/theta).
std::size_t restricted_worst_case(const Rat& theta) {
  const BigInt num = numerator(theta);
  const BigInt den = denominator(theta);
  const BigInt q = den / num;
  const BigInt bound = num == 1 ? BigInt(2 * (q - 1)) : BigInt(2 * q);
  return bound.convert_to<std::size_t>();
}

// floor of (3/2)*ceil(1/theta), the worst case of the expand-and-merge bound.
std::size_t unrestricted_worst_case(const Rat& theta) {
  const BigInt ceil_inv = (denominator(theta) + numerator(theta) - 1) / numerator(theta);
  return BigInt(3 * ceil_inv / 2).convert_to<std::size_t>();
}

ResultDocument result_of(const std::string& mode, const Instance& inst, const Arrangement& arr,
                         TieBreak tb) {
  ResultDocument doc;
  doc.mode = mode;
  doc.theta = inst.theta();
  doc.count = arr.size();
  doc.proxies = arr.proxies();
  const auto violation = verify_arrangement(inst, arr, tb);
  doc.status = violation ? "violation" : "ok";
  doc.violation = violation;
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact solvers and checkers for representative proxy placement on a line"};
  app.name("proxyrep");
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  std::string mode;
  std::string tiebreak = "left";
  std::string side = "leftmost";
  std::string theta_text;
  std::string arrangement_path;
  std::string profile_path;
  unsigned budget = 0;

  auto* solve = app.add_subcommand("solve", "optimal proxy count and arrangement");
  solve->add_option("input", input, "instance file or - for stdin");
  solve->add_option("--mode", mode, "restricted|unrestricted")->required();
  solve->add_option("--tiebreak", tiebreak, "left|right");
  solve->add_option("--out", out_path, "write the document here instead of stdout");

  auto* bound = app.add_subcommand("bound", "constructive worst-case arrangement");
  bound->add_option("input", input, "instance file or - for stdin");
  bound->add_option("--mode", mode, "restricted|unrestricted")->required();
  bound->add_option("--tiebreak", tiebreak, "left|right");
  bound->add_option("--out", out_path, "write the document here instead of stdout");

  auto* genlower = app.add_subcommand("genlower", "emit a worst-case instance");
  genlower->add_option("--mode", mode, "restricted|unrestricted")->required();
  genlower->add_option("--theta", theta_text, "threshold as an exact fraction")->required();
  genlower->add_option("--tiebreak", tiebreak, "left|right");
  genlower->add_option("--out", out_path, "write the document here instead of stdout");

  auto* dual = app.add_subcommand("dual", "spend a proxy budget k on the best guaranteed theta");
  dual->add_option("input", input, "instance file or - for stdin");
  dual->add_option("--k", budget, "proxy budget, at least 3")->required();
  dual->add_option("--tiebreak", tiebreak, "left|right");
  dual->add_option("--out", out_path, "write the document here instead of stdout");

  auto* verify = app.add_subcommand("verify", "exact representation check of an arrangement");
  verify->add_option("input", input, "instance file or - for stdin");
  verify->add_option("--arrangement", arrangement_path, "arrangement file")->required();
  verify->add_option("--tiebreak", tiebreak, "left|right");
  verify->add_option("--out", out_path, "write the document here instead of stdout");

  auto* elect = app.add_subcommand("elect", "compare direct and proxy election outcomes");
  elect->add_option("input", input, "instance file or - for stdin");
  elect->add_option("--arrangement", arrangement_path, "arrangement file")->required();
  elect->add_option("--profile", profile_path, "voter profile file")->required();
  elect->add_option("--tiebreak", tiebreak, "left|right");
  elect->add_option("--side", side, "leftmost|rightmost");
  elect->add_option("--out", out_path, "write the document here instead of stdout");

  auto* render = app.add_subcommand("render", "draw the instance as an SVG number line");
  render->add_option("input", input, "instance file or - for stdin");
  render->add_option("--arrangement", arrangement_path, "arrangement file");
  render->add_option("--out", out_path, "write the SVG here instead of stdout");

  std::vector<const char*> argv;
  argv.push_back("proxyrep");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    const TieBreak tb = parse_tiebreak(tiebreak);

    if (app.got_subcommand(genlower)) {
      const Rat theta = parse_rational_strict(theta_text);
      const Instance inst =
          mode == "restricted" ? gen_lower_restricted(theta) : gen_lower_unrestricted(theta);
      // Self-check: the constructive bound must represent the instance.
      const Arrangement witness =
          mode == "restricted" ? upper_bound_restricted(inst) : upper_bound_unrestricted(inst);
      const std::string status = verify_arrangement(inst, witness, tb) ? "violation" : "ok";
      write_output(emit_instance(inst, "lower-" + mode + "-" + to_string(theta), status), out_path,
                   out);
      return status == "ok" ? 0 : 1;
    }

    NamedInstance named = parse_instance(slurp(input, in));
    const Instance& inst = named.instance;

    if (app.got_subcommand(render)) {
      if (arrangement_path.empty()) {
        write_output(render_svg(inst, nullptr), out_path, out);
      } else {
        const Arrangement arr = parse_arrangement(slurp(arrangement_path, in));
        write_output(render_svg(inst, &arr), out_path, out);
      }
      return 0;
    }

    ResultDocument doc;
    if (app.got_subcommand(solve)) {
      const SolveResult res = mode == "restricted" ? solve_restricted_optimal(inst, tb)
                                                   : solve_unrestricted_optimal(inst, tb);
      doc = result_of(mode, inst, res.arrangement, tb);
    } else if (app.got_subcommand(bound)) {
      if (mode == "restricted") {
        doc = result_of("bound-restricted", inst, upper_bound_restricted(inst), tb);
        doc.bound_worst_case = restricted_worst_case(inst.theta());
      } else {
        doc = result_of("bound-unrestricted", inst, upper_bound_unrestricted(inst), tb);
        doc.bound_worst_case = unrestricted_worst_case(inst.theta());
        doc.bound_certificate = approx_lower_bound(inst);
      }
    } else if (app.got_subcommand(dual)) {
      const DualResult res = dual_theta_for_k(inst, budget);
      Instance at_theta(inst.candidates(), res.theta);
      doc = result_of("dual", at_theta, res.arrangement, tb);
    } else if (app.got_subcommand(verify)) {
      const Arrangement arr = parse_arrangement(slurp(arrangement_path, in));
      doc = result_of("verify", inst, arr, tb);
    } else if (app.got_subcommand(elect)) {
      const Arrangement arr = parse_arrangement(slurp(arrangement_path, in));
      const Profile profile = parse_profile(slurp(profile_path, in));
      const MedianSide ms = side == "rightmost" ? MedianSide::Rightmost : MedianSide::Leftmost;
      doc = result_of("elect", inst, arr, tb);
      doc.distance = outcome_distance(profile, inst, arr, tb, ms);
      doc.direct_winner = median_condorcet_winner(profile, inst, tb, ms) + 1;
      doc.proxy_winner = proxy_voting_winner(profile, inst, arr, tb, ms) + 1;
    }
    write_output(emit_result(doc), out_path, out);
    return doc.status == "ok" ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace proxyrep
