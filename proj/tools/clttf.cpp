// clttf: command-line front end. JSON reports on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 domain error, 2 usage error or unreadable file.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "clttf/acceptance.hpp"
#include "clttf/autgen.hpp"
#include "clttf/coxeter.hpp"
#include "clttf/decomposition.hpp"
#include "clttf/defgraph.hpp"
#include "clttf/dihedral.hpp"
#include "clttf/linkcx.hpp"
#include "clttf/twist.hpp"

namespace {

using json = nlohmann::json;
using namespace clttf;

constexpr const char* kToolkitVersion = "1.0.0";
constexpr int kSchemaVersion = 1;
constexpr std::uint32_t kSeed = 0;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a, 64 bit: a stable content fingerprint, not a security hash.
std::string digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

struct Input {
  std::string label;  // file name as given, without directories
  std::string content;
};

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {std::filesystem::path(path).filename().string(), ss.str()};
}

LabelledGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw GraphError(std::string("malformed JSON graph: ") + e.what());
  }
  std::vector<std::string> isolated;
  std::vector<std::tuple<std::string, std::string, int>> edges;
  try {
    for (const auto& v : j.value("vertices", json::array())) isolated.push_back(v.get<std::string>());
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at("u").get<std::string>(), e.at("v").get<std::string>(), e.at("m").get<int>());
  } catch (const json::exception& e) {
    throw GraphError(std::string("malformed JSON graph: ") + e.what());
  }
  // Route through the text parser so both formats share validation.
  std::ostringstream text_form;
  for (const auto& v : isolated) text_form << "vertex " << v << "\n";
  for (const auto& [u, v, m] : edges) {
    if (m < 2) throw GraphError("label < 2");
    text_form << "edge " << u << " " << v << " " << m << "\n";
  }
  return parse_graph(text_form.str());
}

LabelledGraph load_graph(const Input& in) {
  auto first = in.content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && in.content[first] == '{') return graph_from_json(in.content);
  return parse_graph(in.content);
}

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add_input(const Input& in) {
    inputs_.push_back(in.label);
    all_ += in.content;
    all_.push_back('\0');
  }
  void add_text_input(const std::string& s) {
    all_ += s;
    all_.push_back('\0');
  }

  json finish(json payload) const {
    json r;
    r["schema_version"] = kSchemaVersion;
    r["toolkit_version"] = kToolkitVersion;
    r["command"] = command_;
    r["inputs"] = inputs_;
    r["input_digest"] = digest(all_);
    r["seed"] = kSeed;
    r["result"] = std::move(payload);
    return r;
  }

 private:
  std::string command_;
  std::vector<std::string> inputs_;
  std::string all_;
};

json names_of(const LabelledGraph& g, const std::vector<int>& vs) {
  json a = json::array();
  for (int v : vs) a.push_back(g.name(v));
  return a;
}

json edges_of(const LabelledGraph& g, const std::vector<int>& ks) {
  json a = json::array();
  for (int k : ks) a.push_back(g.edge_name(k));
  return a;
}

json graph_json(const LabelledGraph& g) {
  json es = json::array();
  for (const auto& e : g.edges()) es.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"m", e.m}});
  return {{"vertices", g.names()}, {"edges", es}};
}

json aword_map(const LabelledGraph& src, const LabelledGraph& tgt, const ImageMap& m) {
  json o = json::object();
  for (int v = 0; v < src.n(); ++v) o[src.name(v)] = aword_string(tgt, free_reduce(m.image(v)));
  return o;
}

// ---------------------------------------------------------------------------

json cmd_validate(const LabelledGraph& g) {
  auto r = validate(g);
  json j = {{"connected", r.connected},
            {"at_least_3_vertices", r.at_least_3_vertices},
            {"large_type", r.large_type},
            {"triangle_free", r.triangle_free},
            {"clttf", r.clttf},
            {"two_dimensional", r.two_dimensional},
            {"hyperbolic_type", r.hyperbolic_type}};
  j["witness"] = r.offending_witness ? json{{"kind", r.offending_witness->kind}, {"vertices", names_of(g, r.offending_witness->vertices)}}
                                     : json(nullptr);
  auto vr = is_vertex_rigid(g);
  j["vertex_rigidity"] = {{"rigid", vr.rigid},
                          {"reading", "pointwise, closed neighbourhood"},
                          {"rigid_pointwise_open", vr.rigid_pointwise_open},
                          {"rigid_setwise_closed", vr.rigid_setwise_closed}};
  if (vr.witness) {
    json map = json::object();
    for (int v = 0; v < g.n(); ++v) map[g.name(v)] = g.name(vr.witness->second[v]);
    j["vertex_rigidity"]["witness"] = {{"vertex", g.name(vr.witness->first)}, {"automorphism", map}};
  }
  return j;
}

json cmd_chunks(const LabelledGraph& g) {
  auto s = separations(g);
  auto d = chunks(g);
  json cs = json::array();
  for (const auto& c : d.chunks)
    cs.push_back({{"vertices", names_of(g, c.vertices)}, {"edges", edges_of(g, c.edges)}, {"solid", c.solid}});
  json adj = json::array();
  for (const auto& a : d.adjacency) adj.push_back({{"chunks", {a.a, a.b}}, {"shared", names_of(g, a.shared)}});
  return {{"separating_vertices", names_of(g, s.separating_vertices)},
          {"separating_edges", edges_of(g, s.separating_edges)},
          {"cut_edges", edges_of(g, s.cut_edges)},
          {"even_terminal_edges", edges_of(g, s.even_terminal_edges)},
          {"cnva_generators", names_of(g, cnva_generators(g))},
          {"chunks", cs},
          {"N", d.N},
          {"R", d.R},
          {"R_cut", d.R_cut},
          {"adjacency", adj}};
}

json cmd_iso(const LabelledGraph& a, const LabelledGraph& b) {
  auto ans = groups_isomorphic(a, b);
  json moves = json::array();
  for (const auto& m : ans.moves)
    moves.push_back({{"edge", m.source.edge_name(m.edge)}, {"side", names_of(m.source, m.side)}, {"result", graph_json(m.target)}});
  json j = {{"isomorphic", ans.isomorphic}, {"moves", moves}};
  auto raw = are_isomorphic(a, b);
  j["graphs_isomorphic"] = raw.has_value();
  if (ans.final_map) {
    const auto& last = ans.moves.empty() ? a : ans.moves.back().target;
    json map = json::object();
    for (int v = 0; v < last.n(); ++v) map[last.name(v)] = b.name(ans.final_map->vertex_map[v]);
    j["final_map"] = map;
  } else {
    j["final_map"] = nullptr;
  }
  return j;
}

json cmd_orbit(const LabelledGraph& g) {
  auto orb = twist_orbit(g);
  std::vector<int> order(orb.states.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return orb.states[x] < orb.states[y]; });
  json states = json::array();
  for (int i : order) states.push_back({{"graph", graph_json(orb.reps[i])}, {"is_input", i == orb.base}});
  return {{"size", orb.states.size()}, {"arrows", orb.arrows.size()}, {"states", states}};
}

json cmd_twistgroup(const LabelledGraph& g) {
  auto vg = twist_vertex_group(g);
  json gens = json::array();
  for (const auto& p : vg.generators) {
    json m = json::object();
    for (int k = 0; k < g.num_edges(); ++k) m[g.edge_name(k)] = g.edge_name(p[k]);
    gens.push_back(m);
  }
  return {{"order", vg.order}, {"orbit_size", vg.orbit_size}, {"generators", gens}};
}

json cmd_autgen(const LabelledGraph& g, bool coxeter) {
  require_clttf(g);
  auto gens = coxeter ? coxeter_generators(g) : artin_generators(g);
  json out = json::array();
  int failures = 0;
  for (const auto& a : gens) {
    json j = {{"kind", kind_name(a.kind)}, {"images", aword_map(a.source, a.target, a.action)},
              {"inverse", aword_map(a.target, a.source, a.inverse)}};
    if (!(a.target == a.source)) j["target"] = graph_json(a.target);
    if (a.edge >= 0) j["edge"] = a.source.edge_name(a.edge);
    if (a.vertex >= 0) j["vertex"] = a.source.name(a.vertex);
    if (!a.side.empty()) j["side"] = names_of(a.source, a.side);
    if (a.kind == GenKind::DihedralTwist) j["residue"] = a.residue;
    if (!a.centralizer_word.empty()) j["centralizer_word"] = xword_string(a.source, a.centralizer_word);
    GeneratorCheck c = (coxeter || a.coxeter_only) ? verify_coxeter(a) : verify_artin(a);
    if (!a.coxeter_only && coxeter) {
      auto art = verify_artin(a);
      c.homomorphism = c.homomorphism && art.homomorphism;
      c.inverse_ok = c.inverse_ok && art.inverse_ok;
      if (c.failing_relator.empty()) c.failing_relator = art.failing_relator;
    }
    j["verified"] = {{"homomorphism", c.homomorphism}, {"inverse", c.inverse_ok}};
    if (!c.failing_relator.empty()) j["verified"]["failing_relator"] = c.failing_relator;
    failures += !(c.homomorphism && c.inverse_ok);
    out.push_back(j);
  }
  auto sr = structure_report(g);
  json cent = json::object();
  for (int v = 0; v < g.n(); ++v) {
    auto c = centralizer_generators(g, v);
    json ws = json::array();
    for (const auto& w : c.generators) ws.push_back(xword_string(g, w));
    cent[g.name(v)] = {{"rank", c.rank}, {"generators", ws}};
  }
  auto comm = dehn_twist_commutation(g);
  json unresolved = json::array();
  for (auto [i, j] : comm.unresolved) unresolved.push_back({i, j});
  return {{"coxeter", coxeter},
          {"generators", out},
          {"edge_twist_commutation",
           {{"applies", comm.applies},
            {"base_chunk", names_of(g, comm.base_chunk)},
            {"twists", comm.twists},
            {"pairs", comm.pairs},
            {"commuting", comm.commuting},
            {"unresolved", unresolved}}},
          {"failures", failures},
          {"centralizers", cent},
          {"structure",
           {{"inv_rank", sr.inv_rank},
            {"l", sr.l},
            {"N", sr.N},
            {"R", sr.R},
            {"R_cut", sr.R_cut},
            {"graph_automorphism_order", sr.graph_aut_order},
            {"twist_vertex_group_order", sr.vertex_group_order},
            {"twist_orbit_size", sr.orbit_size},
            {"vertex_rigid", sr.vertex_rigid},
            {"facts", sr.facts}}}};
}

json cmd_dword(int m, const std::string& word) {
  DWord w = parse_dword(word);
  auto g = dihedral_normal_form(m, w);
  return {{"m", m}, {"word", dword_string(w)}, {"identity", g.is_identity()}, {"gamma_form", g.gamma_string()}, {"length", g.length()}};
}

json cmd_wreduce(const LabelledGraph& g, const std::string& word) {
  Coxeter W(g);
  CWord w = parse_cword(g, word);
  auto e = W.element(w);
  return {{"word", W.to_string(w)}, {"normal_form", W.to_string(e)}, {"length", e.length()}, {"identity", e.is_identity()}};
}

json cmd_wball(const LabelledGraph& g, int len, bool count_only) {
  Coxeter W(g);
  auto b = W.ball(len);
  json j = {{"len", len}, {"count", b.size()}};
  if (!count_only) {
    json es = json::array();
    for (const auto& e : b) es.push_back(W.to_string(e));
    j["elements"] = es;
  }
  return j;
}

json cmd_link(int m, int radius, int window, bool classify, bool rigidity) {
  auto b = link_ball(m, radius, window);
  json j = {{"m", m}, {"radius", radius}, {"window", window}, {"edges", b.edges.size()},
            {"vertices", b.num_vertices()}, {"girth_through_base", girth_through_base(b)}};
  if (classify) {
    auto cl = classify_min_circuits(b);
    json cs = json::array();
    for (std::size_t i = 0; i < cl.circuits.size(); ++i) {
      json c = {{"word", syllable_string(cl.circuits[i].word)}, {"matched", cl.classes[i].matched}};
      if (cl.classes[i].matched) c["family"] = cl.classes[i].family == 0 ? "s-first" : "t-first", c["n"] = cl.classes[i].n;
      cs.push_back(c);
    }
    j["classification"] = {{"circuits", cs}, {"unmatched", cl.unmatched}};
  }
  if (rigidity) {
    auto rc = rigidity_counts(b);
    json pairs = json::object();
    for (auto [k, c] : rc.pair) pairs[std::to_string(k)] = c;
    j["rigidity"] = {{"pairs", pairs},
                     {"triple_sE_E_tE", rc.triple_t},
                     {"triple_sE_E_tinvE", rc.triple_tinv},
                     {"subword_st", rc.subword_st},
                     {"subword_st_inverse", rc.subword_stinv},
                     {"circuits", rc.total},
                     {"unit_exponent_circuits", rc.unit_total}};
  }
  return j;
}

json cmd_theta(const LabelledGraph& g, int len, int max_len, const std::string& dot_path) {
  require_clttf(g);
  auto t = theta_w_ball(g, len);
  auto rep = verify_minimal_equals_basic(t, max_len);
  auto eq = compare_chunk_equivalence(t, rep, 4);
  std::size_t edges = 0;
  for (const auto& a : t.graph.adj) edges += a.size();
  json j = {{"len", len},
            {"max_circuit", max_len},
            {"vertices", t.graph.n()},
            {"edges", edges / 2},
            {"safe_vertices", rep.safe_vertices},
            {"circuits", rep.circuits.size()},
            {"isometric", rep.isometric},
            {"basic_minimal", rep.basic},
            {"counterexamples", rep.counterexamples},
            {"chunk_equivalence",
             {{"depth", 4}, {"pairs", eq.pairs}, {"agree", eq.agree}, {"disagree", eq.disagree},
              {"equivalent_pairs", eq.equivalent_pairs}, {"same_chunk_pairs", eq.same_chunk_pairs}}}};
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw UsageError("cannot write " + dot_path);
    out << theta_dot(t, rep);
    j["dot"] = std::filesystem::path(dot_path).filename().string();
  }
  return j;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// Golden manifest lines: <name> <exit code> <arguments...>; "@DATA@" expands
// to the data directory next to the golden directory's parent.
int run_golden(const std::string& dir, std::ostream& out) {
  namespace fs = std::filesystem;
  std::ifstream manifest(fs::path(dir) / "manifest.txt");
  if (!manifest) {
    out << "FAIL  [golden] cannot read " << (fs::path(dir) / "manifest.txt").string() << "\n";
    return 1;
  }
  const std::string data = (fs::path(dir).parent_path().parent_path() / "data").string();
  int failures = 0;
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name;
    int code = 0;
    ls >> name >> code;
    std::vector<std::string> args;
    std::string tok;
    while (ls >> std::quoted(tok)) {
      auto p = tok.find("@DATA@");
      if (p != std::string::npos) tok.replace(p, 6, data);
      args.push_back(tok);
    }
    std::ostringstream o, e;
    int got = run_cli(args, o, e);
    std::ifstream want_file(fs::path(dir) / (name + ".json"));
    std::string want;
    if (want_file) {
      std::ostringstream ss;
      ss << want_file.rdbuf();
      want = ss.str();
    }
    bool ok = want_file && got == code && o.str() == want;
    out << (ok ? "PASS" : "FAIL") << "  [golden:" << name << "]";
    if (!want_file) out << " missing expected file";
    else if (got != code) out << " exit " << got << " (expected " << code << ")";
    else if (!ok) out << " output differs from " << name << ".json";
    out << "\n";
    failures += !ok;
  }
  return failures;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isomorphism and automorphism toolkit for large-type triangle-free Artin and Coxeter groups", "clttf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolkitVersion);

  std::string f1, f2, word, dot, filter, golden;
  int m = 3, len = 3, radius = 6, window = 3, maxcircuit = 8;
  bool coxeter = false, count_only = false, classify = false, rigidity = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the standing hypotheses and vertex rigidity");
  validate_cmd->add_option("graph", f1, "graph file")->required();
  auto* chunks_cmd = app.add_subcommand("chunks", "separations and chunk decomposition");
  chunks_cmd->add_option("graph", f1)->required();
  auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of the groups of two graphs");
  iso_cmd->add_option("first", f1)->required();
  iso_cmd->add_option("second", f2)->required();
  auto* orbit_cmd = app.add_subcommand("orbit", "twist-equivalence class of a graph");
  orbit_cmd->add_option("graph", f1)->required();
  auto* tg_cmd = app.add_subcommand("twistgroup", "vertex group of the twist groupoid, acting on edges");
  tg_cmd->add_option("graph", f1)->required();
  auto* aut_cmd = app.add_subcommand("autgen", "generators of the automorphism group, verified");
  aut_cmd->add_option("graph", f1)->required();
  aut_cmd->add_flag("--coxeter", coxeter, "include Coxeter-only generators and verify in W");
  auto* dword_cmd = app.add_subcommand("dword", "normal form in a dihedral Artin group");
  dword_cmd->add_option("--m", m, "edge label")->required()->check(CLI::Range(2, 1000));
  dword_cmd->add_option("word", word, "word over s t S T")->required();
  auto* wred_cmd = app.add_subcommand("wreduce", "reduced normal form in the Coxeter group");
  wred_cmd->add_option("graph", f1)->required();
  wred_cmd->add_option("word", word, "vertex names separated by spaces")->required();
  auto* wball_cmd = app.add_subcommand("wball", "Coxeter elements up to a given length");
  wball_cmd->add_option("graph", f1)->required();
  wball_cmd->add_option("--len", len)->required()->check(CLI::Range(0, 64));
  wball_cmd->add_flag("--count-only", count_only);
  auto* link_cmd = app.add_subcommand("link", "link of a rank-two vertex");
  link_cmd->add_option("--m", m)->required()->check(CLI::Range(3, 12));
  link_cmd->add_option("--radius", radius)->required()->check(CLI::Range(1, 24));
  link_cmd->add_option("--window", window, "largest exponent per step")->check(CLI::Range(1, 8));
  link_cmd->add_flag("--classify", classify);
  link_cmd->add_flag("--rigidity", rigidity);
  auto* theta_cmd = app.add_subcommand("theta", "fixed-set graph ball of the Coxeter group");
  theta_cmd->add_option("graph", f1)->required();
  theta_cmd->add_option("--len", len)->required()->check(CLI::Range(0, 12));
  theta_cmd->add_option("--maxcircuit", maxcircuit)->required()->check(CLI::Range(4, 16));
  theta_cmd->add_option("--dot", dot, "write a DOT rendering here");
  auto* self_cmd = app.add_subcommand("selftest", "acceptance criteria and golden reports");
  self_cmd->add_option("--filter", filter, "criterion id or tag; 'golden' for golden reports only");
  self_cmd->add_option("--golden", golden, "directory with manifest.txt and expected reports");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "clttf: " << e.what() << "\n";
    return 2;
  }

  try {
    json result;
    Report rep(app.get_subcommands().front()->get_name());
    auto graph = [&](const std::string& path) {
      Input in = read_input(path);
      rep.add_input(in);
      return load_graph(in);
    };
    if (*validate_cmd) result = cmd_validate(graph(f1));
    else if (*chunks_cmd) result = cmd_chunks(graph(f1));
    else if (*iso_cmd) {
      auto a = graph(f1);
      auto b = graph(f2);
      result = cmd_iso(a, b);
    } else if (*orbit_cmd) result = cmd_orbit(graph(f1));
    else if (*tg_cmd) result = cmd_twistgroup(graph(f1));
    else if (*aut_cmd) result = cmd_autgen(graph(f1), coxeter);
    else if (*dword_cmd) {
      rep.add_text_input(std::to_string(m) + ":" + word);
      result = cmd_dword(m, word);
    } else if (*wred_cmd) {
      auto g = graph(f1);
      rep.add_text_input(word);
      result = cmd_wreduce(g, word);
    } else if (*wball_cmd) result = cmd_wball(graph(f1), len, count_only);
    else if (*link_cmd) {
      rep.add_text_input(std::to_string(m) + ":" + std::to_string(radius) + ":" + std::to_string(window));
      result = cmd_link(m, radius, window, classify, rigidity);
    } else if (*theta_cmd) result = cmd_theta(graph(f1), len, maxcircuit, dot);
    else if (*self_cmd) {
      int failures = 0;
      if (filter != "golden") failures += acceptance::run(out, filter);
      if (!golden.empty() && (filter.empty() || filter == "golden")) failures += run_golden(golden, out);
      if (filter == "golden" && golden.empty()) {
        err << "clttf: --filter golden needs --golden <dir>\n";
        return 2;
      }
      out << "selftest: " << failures << " failure(s)\n";
      return failures ? 1 : 0;
    }
    out << rep.finish(result).dump(2) << "\n";
    return 0;
  } catch (const UsageError& e) {
    err << "clttf: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    err << "clttf: " << e.what() << "\n";
    return 1;
  } catch (const OrbitOverflow& e) {
    err << "clttf: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "clttf: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "clttf: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}
