#include "moebius/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <regex>
#include <string>
#include <vector>

#include "moebius/error.hpp"
#include "moebius/fig8.hpp"
#include "moebius/oracle.hpp"
#include "moebius/tree.hpp"

namespace moebius::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& text, const char* what) {
  static const std::regex kInteger("[+-]?[0-9]+");
  if (!std::regex_match(text, kInteger))
    throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

std::string path_str(const TreePath& path) {
  std::string out;
  for (const TreeVertex& v : path.vertices) out += (out.empty() ? "" : " -> ") + v.str();
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moebius band tree of one-sided boundary slopes in a solid torus, and one-sided "
               "splittings of even Dehn fillings of the figure-8 knot exterior."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string l_arg, m_arg, p_arg, q_arg;
  std::string bound_arg = "400";
  std::string format_arg = "json";
  bool json = false;

  auto* genus_cmd = app.add_subcommand("genus", "Genus of the surface bounded by slope (L,M)");
  auto* path_cmd = app.add_subcommand("path", "Root path of slope (L,M) in the tree");
  for (auto* cmd : {genus_cmd, path_cmd}) {
    cmd->add_option("L", l_arg, "longitude coefficient")->required();
    cmd->add_option("M", m_arg, "meridian coefficient")->required();
  }

  auto* children_cmd = app.add_subcommand("children", "Children of vertex (L,M) up to a longitude bound");
  children_cmd->add_option("L", l_arg, "longitude coefficient")->required();
  children_cmd->add_option("M", m_arg, "meridian coefficient")->required();
  children_cmd->add_option("--bound", bound_arg, "largest longitude listed")->required();

  auto* tree_cmd = app.add_subcommand("tree", "Export the tree up to a longitude bound");
  tree_cmd->add_option("--bound", bound_arg, "largest longitude listed")->required();
  tree_cmd->add_option("--format", format_arg, "dot or json")->capture_default_str();

  const char* filling_note =
      "Filling specs are given as (P,Q); the filling slope is (2P,Q) in knot-space coordinates.";
  auto* classify_cmd = app.add_subcommand("classify", "Classify splitting surfaces of the (2P,Q) filling");
  classify_cmd->footer(filling_note);
  classify_cmd->add_option("P", p_arg, "half the longitude of the filling slope")->required();
  classify_cmd->add_option("Q", q_arg, "meridian of the filling slope")->required();
  classify_cmd->add_flag("--json", json, "print the report as JSON");

  auto* convert_cmd = app.add_subcommand("convert", "Convert knot slope (L,M) to torus coordinates for the (2P,Q) filling");
  convert_cmd->footer(filling_note);
  convert_cmd->add_option("P", p_arg, "half the longitude of the filling slope")->required();
  convert_cmd->add_option("Q", q_arg, "meridian of the filling slope")->required();
  convert_cmd->add_option("L", l_arg, "first knot-space coordinate")->required();
  convert_cmd->add_option("M", m_arg, "second knot-space coordinate")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run every brute-force check up to a longitude bound");
  verify_cmd->add_option("--bound", bound_arg, "largest longitude checked")->capture_default_str();
  verify_cmd->add_flag("--json", json, "print the reports as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (genus_cmd->parsed()) {
      const Slope s = make_slope(parse_integer(l_arg, "L"), parse_integer(m_arg, "M"));
      out << genus(quadrant_project(s)) << '\n';
    } else if (path_cmd->parsed()) {
      const Slope s = make_slope(parse_integer(l_arg, "L"), parse_integer(m_arg, "M"));
      const TreePath path = path_to_root(quadrant_project(s));
      out << path_str(path) << '\n';
    } else if (children_cmd->parsed()) {
      const TreeVertex v = TreeVertex::make(parse_integer(l_arg, "L"), parse_integer(m_arg, "M"));
      const Integer bound = parse_integer(bound_arg, "--bound");
      if (bound < v.longitude())
        throw Error(ErrorCode::InvalidBound, "bound must be at least the vertex longitude");
      for (const TreeVertex& w : children(v, bound)) out << w << '\n';
    } else if (tree_cmd->parsed()) {
      out << export_tree(parse_integer(bound_arg, "--bound"), parse_tree_format(format_arg));
    } else if (classify_cmd->parsed()) {
      const FillingReport report =
          classify(FillingSpec::make(parse_integer(p_arg, "P"), parse_integer(q_arg, "Q")));
      if (json)
        out << to_json(report).dump(2) << '\n';
      else
        out << to_text(report);
    } else if (convert_cmd->parsed()) {
      const FillingSpec spec = FillingSpec::make(parse_integer(p_arg, "P"), parse_integer(q_arg, "Q"));
      const Slope knot = make_slope(parse_integer(l_arg, "L"), parse_integer(m_arg, "M"));
      out << knot_to_torus(knot, transition_matrix(spec)) << '\n';
    } else if (verify_cmd->parsed()) {
      const auto reports = oracle::verify_all(parse_integer(bound_arg, "--bound"));
      bool clean = true;
      nlohmann::json doc = nlohmann::json::array();
      for (const oracle::Report& r : reports) {
        clean = clean && r.clean();
        if (json)
          doc.push_back(r.to_json());
        else
          out << r.summary() << '\n';
      }
      if (json) out << doc.dump(2) << '\n';
      return clean ? kOk : kVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalInconsistency ? kVerifyFailed : kBadInput;
  }
  return kOk;
}

}  // namespace moebius::cli
