// stargenus: command-line front end.
//
// Exit codes: 0 success, 1 domain negative (not source-sink, not planar,
// invalid graph for `validate`, disagreement for `check`), 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stargenus/stargenus.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace stargenus;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Options {
  std::string command;
  std::vector<std::string> inputs;
  bool json = false;
  unsigned threads = 0;
  std::optional<std::size_t> cap;
  bool all_partitions = false;
  std::string output;
  // generate
  std::string fixture;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::size_t n4 = 0;
  std::size_t n6 = 0;
  bool source_sink = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

StarGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return parse_stg(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void require_valid(const StarGraph& g) {
  std::vector<std::string> problems;
  for (const auto& v : validate(g)) problems.push_back(v.message);
  if (!problems.empty()) throw InvalidGraph(std::move(problems));
}

std::size_t oracle_cap(const Options& opt) {
  if (opt.cap) return *opt.cap;
  if (const char* env = std::getenv("STARGENUS_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw InputError(std::string("bad STARGENUS_ORACLE_CAP '") + env + "'");
    }
  }
  return kDefaultOracleCap;
}

Json witness_json(const PermissiblePartition& p) {
  Json w = Json::object();
  for (const auto& [v, s] : p.side) w[std::to_string(v)] = side_name(s);
  return w;
}

std::string witness_text(const PermissiblePartition& p) {
  std::string out;
  for (const auto& [v, s] : p.side) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v) + "=" + side_name(s);
  }
  return out;
}

int not_source_sink(const Options& opt, const StarGraph& g, std::ostream& out) {
  if (opt.json) {
    Json j;
    j["source_sink"] = false;
    j["n_vertices"] = g.vertex_count();
    out << j.dump() << '\n';
  } else {
    out << "not source-sink; run `cover`\n";
  }
  return kNegative;
}

int run_validate(const Options& opt, std::ostream& out) {
  const StarGraph g = read_graph(opt.inputs.at(0));
  const auto violations = validate(g);
  if (opt.json) {
    Json j;
    j["valid"] = violations.empty();
    j["violations"] = Json::array();
    for (const auto& v : violations) j["violations"].push_back(v.message);
    out << j.dump() << '\n';
  } else if (violations.empty()) {
    out << "ok\n";
  } else {
    for (const auto& v : violations) out << "violation: " << v.message << '\n';
  }
  return violations.empty() ? kOk : kNegative;
}

int run_orient(const Options& opt, std::ostream& out) {
  const StarGraph g = read_graph(opt.inputs.at(0));
  require_valid(g);
  const auto o = find_source_sink_orientation(g);
  if (!o) return not_source_sink(opt, g, out);
  if (opt.json) {
    Json j;
    j["source_sink"] = true;
    Json phases = Json::object();
    for (const auto& [v, p] : o->phase) phases[std::to_string(v)] = p;
    j["phases"] = phases;
    Json edges = Json::object();
    for (const auto& [id, d] : o->direction) edges[std::to_string(id)] = {to_string(d.tail), to_string(d.head)};
    j["edges"] = edges;
    out << j.dump() << '\n';
  } else {
    out << "source-sink\n";
    for (const auto& [v, p] : o->phase) out << "phase " << v << ' ' << int{p} << '\n';
    for (const auto& [id, d] : o->direction) {
      out << "edge " << id << ' ' << to_string(d.tail) << " -> " << to_string(d.head) << '\n';
    }
  }
  return kOk;
}

int write_stg(const Options& opt, const StarGraph& g, std::ostream& out) {
  const std::string text = to_stg(g);
  if (opt.output.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(opt.output);
  if (!file) throw InputError("cannot write " + opt.output);
  file << text;
  return kOk;
}

int run_cover(const Options& opt, std::ostream& out) {
  return write_stg(opt, double_cover(read_graph(opt.inputs.at(0))), out);
}

int run_circuit(const Options& opt, std::ostream& out) {
  const StarGraph g = read_graph(opt.inputs.at(0));
  require_valid(g);
  const auto o = find_source_sink_orientation(g);
  if (!o) return not_source_sink(opt, g, out);
  const RsCircuit rs = find_rs_circuit(g, *o);
  const auto classes = classify_vertices(g, rs.circuit);
  if (opt.json) {
    Json j;
    j["circuit"] = Json::array();
    for (const auto& e : rs.circuit.edges) j["circuit"].push_back(e.id);
    Json cls = Json::object();
    for (const auto& [v, c] : classes) cls[std::to_string(v)] = to_string(c);
    j["classes"] = cls;
    out << j.dump() << '\n';
  } else {
    out << format_circuit(rs.circuit, classes);
  }
  return kOk;
}

Json diagram_json(const Pipeline& p) {
  Json j;
  j["circle"] = p.star.circle_size;
  j["attachments"] = Json::array();
  for (const auto& a : p.star.attachments) {
    Json item;
    if (const auto* c = std::get_if<ChordAttachment>(&a)) {
      item["type"] = "chord";
      item["vertex"] = c->vertex;
      item["points"] = {c->p, c->q};
    } else if (const auto* t = std::get_if<TriadAttachment>(&a)) {
      item["type"] = "triad";
      item["vertex"] = t->vertex;
      item["points"] = {t->p, t->q, t->r};
      item["kind"] = t->kind == TriadKind::flat ? "flat" : "crossed";
    } else if (const auto* d = std::get_if<DoubleChordAttachment>(&a)) {
      item["type"] = "dchord";
      item["vertex"] = d->vertex;
      item["principal"] = d->principal;
      item["points"] = {d->q, d->r};
    }
    j["attachments"].push_back(item);
  }
  Json expanded;
  expanded["endpoints"] = p.expanded.endpoints;
  expanded["chords"] = Json::array();
  for (const auto& c : p.expanded.chords) expanded["chords"].push_back({c.a, c.b});
  j["expanded"] = expanded;
  j["matrix"] = p.matrix.to_rows();
  return j;
}

int run_diagram(const Options& opt, std::ostream& out) {
  const StarGraph g = read_graph(opt.inputs.at(0));
  require_valid(g);
  if (!find_source_sink_orientation(g)) return not_source_sink(opt, g, out);
  const Pipeline p = build_pipeline(g);
  if (opt.json) {
    out << diagram_json(p).dump() << '\n';
  } else {
    out << format_star_chord_diagram(p.star);
  }
  return kOk;
}

int run_genus(const Options& opt, std::ostream& out) {
  const StarGraph g = read_graph(opt.inputs.at(0));
  require_valid(g);
  if (!find_source_sink_orientation(g)) return not_source_sink(opt, g, out);
  const GenusResult r = min_genus(g, opt.threads);
  if (opt.json) {
    Json j;
    j["source_sink"] = true;
    j["n_vertices"] = r.n_vertices;
    j["n_chords"] = r.n_chords;
    j["min_genus"] = r.min_genus;
    j["ranks"] = {r.rank_white, r.rank_black};
    j["witness"] = witness_json(r.witness);
    out << j.dump() << '\n';
  } else {
    out << "min_genus: " << r.min_genus << '\n'
        << "ranks: " << r.rank_white << ' ' << r.rank_black << '\n'
        << "witness: " << witness_text(r.witness) << '\n';
  }
  return kOk;
}

int run_planar(const Options& opt, std::ostream& out) {
  const StarGraph g = read_graph(opt.inputs.at(0));
  require_valid(g);
  if (!find_source_sink_orientation(g)) return not_source_sink(opt, g, out);
  const PlanarityResult r = is_planar(g);
  if (opt.json) {
    Json j;
    j["planar"] = r.planar;
    if (r.planar) {
      j["witness"] = witness_json(*r.witness);
    } else {
      j["conflict"] = r.conflict;
    }
    out << j.dump() << '\n';
  } else if (r.planar) {
    out << "planar\nwitness: " << witness_text(*r.witness) << '\n';
  } else {
    out << "not planar\nconflict:";
    for (std::size_t c : r.conflict) out << ' ' << c;
    out << '\n';
  }
  return r.planar ? kOk : kNegative;
}

int run_oracle(const Options& opt, std::ostream& out) {
  const StarGraph g = read_graph(opt.inputs.at(0));
  require_valid(g);
  if (!find_source_sink_orientation(g)) return not_source_sink(opt, g, out);
  const OracleResult r = oracle_min_genus(g, {oracle_cap(opt), opt.threads});
  if (opt.json) {
    Json j;
    j["source_sink"] = true;
    j["n_vertices"] = r.n_vertices;
    j["n_chords"] = r.n_chords;
    j["min_genus"] = r.min_genus;
    j["faces"] = {r.faces.white, r.faces.black};
    Json w = Json::object();
    for (const auto& [v, bit] : r.witness.white_class) w[std::to_string(v)] = bit;
    j["witness"] = w;
    j["method"] = "bruteforce";
    out << j.dump() << '\n';
  } else {
    out << "min_genus: " << r.min_genus << '\n'
        << "faces: " << r.faces.white << ' ' << r.faces.black << '\n'
        << "method: bruteforce\n";
  }
  return kOk;
}

int run_check(const Options& opt, std::ostream& out) {
  const std::size_t cap = oracle_cap(opt);
  bool all_agree = true;
  Json results = Json::array();
  std::ostringstream text;
  for (const auto& path : opt.inputs) {
    const StarGraph g = read_graph(path);
    require_valid(g);
    if (!find_source_sink_orientation(g)) {
      if (!opt.json) text << path << ": ";
      not_source_sink(opt, g, opt.json ? std::cerr : text);
      return (out << text.str(), kNegative);
    }
    const Pipeline p = build_pipeline(g);
    const GenusResult genus = min_genus(p, opt.threads);
    const OracleResult oracle = oracle_min_genus(g, {cap, opt.threads});
    bool agree = genus.min_genus == oracle.min_genus;
    Json item;
    item["input"] = path;
    item["min_genus"] = genus.min_genus;
    item["oracle_min_genus"] = oracle.min_genus;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    if (opt.all_partitions) {
      for (const auto& c : check_all_partitions(p)) {
        ++checked;
        if (static_cast<long long>(c.matrix_genus) != c.traced_genus) ++mismatches;
      }
      agree = agree && mismatches == 0;
      item["partitions_checked"] = checked;
      item["partition_mismatches"] = mismatches;
    }
    item["agree"] = agree;
    results.push_back(item);
    all_agree = all_agree && agree;
    text << path << ": genus " << genus.min_genus << ", oracle " << oracle.min_genus;
    if (opt.all_partitions) text << ", partitions " << checked << " checked, " << mismatches << " mismatched";
    text << (agree ? ", agree\n" : ", DISAGREE\n");
  }
  if (opt.json) {
    Json j;
    j["results"] = results;
    j["agree"] = all_agree;
    out << j.dump() << '\n';
  } else {
    out << text.str();
  }
  return all_agree ? kOk : kNegative;
}

int run_generate(const Options& opt, std::ostream& out) {
  if (opt.fixture == "chain") return write_stg(opt, fixtures::chain(opt.k), out);
  if (opt.fixture == "random") {
    const auto g = fixtures::random_graph(opt.seed, opt.n4, opt.n6, opt.source_sink);
    if (!g) {
      out << "infeasible: no vertices requested\n";
      return kNegative;
    }
    return write_stg(opt, *g, out);
  }
  try {
    return write_stg(opt, fixtures::by_name(opt.fixture), out);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int dispatch(const Options& opt, std::ostream& out) {
  if (opt.command == "validate") return run_validate(opt, out);
  if (opt.command == "orient") return run_orient(opt, out);
  if (opt.command == "cover") return run_cover(opt, out);
  if (opt.command == "circuit") return run_circuit(opt, out);
  if (opt.command == "diagram") return run_diagram(opt, out);
  if (opt.command == "genus") return run_genus(opt, out);
  if (opt.command == "planar") return run_planar(opt, out);
  if (opt.command == "oracle") return run_oracle(opt, out);
  if (opt.command == "check") return run_check(opt, out);
  if (opt.command == "generate") return run_generate(opt, out);
  throw InputError("unknown command " + opt.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal checkerboard genus of *-graphs with vertices of degree 4 and 6"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.inputs, "Input .stg file")->required()->expected(1);
    sub->add_flag("--json", opt.json, "Emit JSON");
    sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
    return sub;
  };

  add_graph_command("validate", "Check the graph invariants");
  add_graph_command("orient", "Find a source-sink orientation");
  add_graph_command("cover", "Write the source-sink double cover as .stg")
      ->add_option("-o,--output", opt.output, "Output file (default stdout)");
  add_graph_command("circuit", "Build a rotating-splitting Euler circuit");
  add_graph_command("diagram", "Print the *-chord diagram");
  add_graph_command("genus", "Minimal genus by rank minimisation");
  add_graph_command("planar", "Quadratic planarity test");
  add_graph_command("oracle", "Minimal genus by brute-force face tracing")
      ->add_option("--cap", opt.cap, "Refuse graphs with more vertices (default 20 or $STARGENUS_ORACLE_CAP)");

  CLI::App* check = app.add_subcommand("check", "Cross-check the matrix route against the oracle");
  check->add_option("inputs", opt.inputs, "Input .stg files")->required();
  check->add_flag("--json", opt.json, "Emit JSON");
  check->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  check->add_option("--cap", opt.cap, "Oracle vertex cap");
  check->add_flag("--all-partitions", opt.all_partitions, "Compare every permissible partition, not just minima");

  CLI::App* generate = app.add_subcommand("generate", "Emit a fixture graph");
  generate->add_option("name", opt.fixture, "g8 | gx | ghopf | gt3f | gt3c | chain | random")->required();
  generate->add_option("--k", opt.k, "chain length");
  generate->add_option("--seed", opt.seed, "random seed");
  generate->add_option("--n4", opt.n4, "random: number of 4-vertices");
  generate->add_option("--n6", opt.n6, "random: number of 6-vertices");
  generate->add_flag("--source-sink", opt.source_sink, "random: force the source-sink condition");
  generate->add_option("-o,--output", opt.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(opt, std::cout);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const InvalidGraph& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kInputError;
}
