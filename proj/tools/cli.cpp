#include "cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "cauchon/cells.hpp"
#include "cauchon/flow.hpp"
#include "cauchon/network.hpp"
#include "cauchon/perm.hpp"
#include "cauchon/poisson.hpp"
#include "cauchon/quantum.hpp"
#include "cauchon/restoration.hpp"

namespace cauchon::cli {

std::string CommandResult::rendered() const {
  if (as_json) return json.dump(2) + "\n";
  if (text.empty() || text.back() == '\n') return text;
  return text + "\n";
}

namespace {

using Action = std::function<CommandResult()>;

std::vector<int> index_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw DomainError("bad index list '" + text + "'");
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

CommandResult verdict(bool yes, Json j, std::string text) {
  CommandResult r;
  r.code = yes ? kYes : kNo;
  r.json = std::move(j);
  r.text = std::move(text);
  return r;
}

CommandResult ok(Json j, std::string text) { return verdict(true, std::move(j), std::move(text)); }

Json trace_json(const std::vector<TraceEntry<Rat>>& trace) {
  Json out = Json::array();
  for (const auto& t : trace) out.push_back({{"step", {t.step.j, t.step.beta}}, {"matrix", matrix_to_json(t.after)}});
  return out;
}

std::string trace_text(const std::vector<TraceEntry<Rat>>& trace) {
  std::string out;
  for (const auto& t : trace)
    out += "after (" + std::to_string(t.step.j) + "," + std::to_string(t.step.beta) + "):\n" + matrix_to_csv(t.after);
  return out;
}

PlanarNetwork network_input(const std::string& network, const std::string& diagram) {
  if (!network.empty()) return network_from_json(Json::parse(read_file(network)));
  if (!diagram.empty()) return postnikov_network(load_diagram(diagram));
  throw DomainError("give --network or --diagram");
}

// Both closed-form flows of H = a.
const char* const kFlows[] = {
    R"json({"m":2,"p":2,"params":{"beta":"3","gamma":"5"},"entries":[["0","beta"],["gamma","2*beta*gamma*t"]]})json",
    R"json({"m":2,"p":2,"params":{"alpha":"2","beta":"1","gamma":"1"},)json"
    R"json("entries":[["alpha","beta*exp(alpha*t)"],["gamma*exp(alpha*t)","beta*gamma/alpha*exp(2*alpha*t)"]]})json",
};

struct Tally {
  std::size_t checked = 0;
  std::size_t agreed = 0;
  Json json() const { return {{"checked", checked}, {"agreed", agreed}}; }
  std::string line(const std::string& what) const {
    return what + ": " + std::to_string(agreed) + "/" + std::to_string(checked) + " agree";
  }
};

CommandResult verify_all(std::size_t m, std::size_t p, unsigned jobs) {
  const Guard guard = Guard::from_env();
  guard.require_probabilistic(m, p, "verify all");

  const UnifyingReport u = unifying_check(m, p, jobs);
  Tally unifying{u.checked, u.agreed};

  Tally lind;
  for_each_diagram(m, p, [&](const CauchonDiagram& d) {
    const PlanarNetwork net = postnikov_network(d);
    for (const auto& [ix, value] : all_minors(path_matrix(net))) {
      ++lind.checked;
      lind.agreed += nonintersecting_count(net, ix.rows, ix.cols) == value;
    }
  });

  Tally semi;
  const int n = static_cast<int>(m * p), pi = static_cast<int>(p);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      ++semi.checked;
      semi.agreed += semiclassical_check(m, p, x / pi + 1, x % pi + 1, y / pi + 1, y % pi + 1).agrees;
    }

  Tally flows;
  const PoissonRing ring(2, 2);
  for (const char* f : kFlows) {
    const FlowResidual r = verify_flow(flow_from_json(Json::parse(f)), ring.parse("a"), ring);
    ++flows.checked;
    flows.agreed += r.exact_zero;
  }

  const bool pass = u.ok() && lind.agreed == lind.checked && semi.agreed == semi.checked && flows.agreed == flows.checked;
  Json j{{"m", m},
         {"p", p},
         {"unifying", unifying.json()},
         {"lindstrom", lind.json()},
         {"semiclassical", semi.json()},
         {"flows", flows.json()},
         {"pass", pass}};
  Json mism = Json::array();
  for (const auto& mm : u.mismatches) mism.push_back({{"diagram", diagram_to_json(mm.diagram)}, {"detail", mm.detail}});
  j["unifying"]["mismatches"] = mism;
  std::string text = join({unifying.line("unifying"), lind.line("lindstrom"), semi.line("semiclassical"),
                           flows.line("flows"), pass ? "PASS" : "FAIL"});
  return verdict(pass, std::move(j), std::move(text));
}

class Cli {
 public:
  Cli() : app_("Cauchon diagrams, totally nonnegative matrices and their quantum and Poisson analogues", "cauchon") {
    app_.require_subcommand(1);
    build();
  }

  CommandResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"cauchon"};
    for (const auto& a : args) argv.push_back(a.c_str());
    CommandResult out;
    try {
      app_.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      std::ostringstream o, err;
      const int code = app_.exit(e, o, err);
      out.text = o.str();
      out.error = err.str();
      out.code = code == 0 ? kYes : kUsage;
      return out;
    }
    const bool as_json = format_ == "json";
    try {
      out = action_();
    } catch (const ResourceError& e) {
      out = CommandResult{};
      out.code = kResource;
      out.error = std::string("resource limit: ") + e.what();
      out.json = {{"error", e.what()}, {"kind", "resource"}};
    } catch (const DomainError& e) {
      out = CommandResult{};
      out.code = kUsage;
      out.error = std::string("error: ") + e.what();
      out.json = {{"error", e.what()}, {"kind", "domain"}};
    } catch (const InvariantError& e) {
      out = CommandResult{};
      out.code = kNo;
      out.error = std::string("invariant violated: ") + e.what();
      out.json = {{"error", e.what()}, {"kind", "invariant"}};
    } catch (const nlohmann::json::exception& e) {
      out = CommandResult{};
      out.code = kUsage;
      out.error = std::string("bad JSON: ") + e.what();
      out.json = {{"error", e.what()}, {"kind", "domain"}};
    }
    out.as_json = as_json;
    if (!as_json && !out.error.empty()) out.text.clear();
    if (as_json && out.json.is_null()) out.json = Json::object();
    return out;
  }

 private:
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, Action act) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("--format", format_, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->callback([this, act = std::move(act)] { action_ = act; });
    return sub;
  }

  CLI::App* group(const std::string& name, const std::string& help) {
    CLI::App* g = app_.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  }

  template <class T>
  T& slot() {
    auto p = std::make_shared<T>();
    T& ref = *p;
    keep_.push_back(std::move(p));
    return ref;
  }

  void build() {
    build_exactmat();
    build_cauchon();
    build_diagram();
    build_network();
    build_perm();
    build_cells();
    build_quantum();
    build_poisson();
    build_verify();
  }

  void build_exactmat() {
    {
      auto& file = slot<std::string>();
      auto& rows = slot<std::string>();
      auto& cols = slot<std::string>();
      CLI::App* s = leaf(&app_, "minors", "every minor of a matrix, or one of them", [&] {
        const RatMatrix a = load_matrix(file);
        if (!rows.empty() || !cols.empty()) {
          const MinorIndex ix(index_list(rows), index_list(cols));
          const Rat v = minor(a, ix);
          return ok({{"minor", to_string(ix)}, {"value", to_string(v)}}, to_string(ix) + " = " + to_string(v));
        }
        Json list = Json::array();
        std::vector<std::string> lines;
        for (const auto& [ix, v] : all_minors(a)) {
          list.push_back({{"minor", to_string(ix)}, {"value", to_string(v)}});
          lines.push_back(to_string(ix) + " = " + to_string(v));
        }
        return ok({{"count", list.size()}, {"minors", list}}, join(lines));
      });
      s->add_option("matrix", file, "matrix file (JSON or CSV)")->required();
      s->add_option("--rows", rows, "e.g. 1,2");
      s->add_option("--cols", cols, "e.g. 2,3");
    }
    {
      auto& file = slot<std::string>();
      CLI::App* s = leaf(&app_, "tp-check", "total positivity from the initial minors", [&] {
        const bool tp = is_tp(load_matrix(file));
        return verdict(tp, {{"tp", tp}}, tp ? "totally positive" : "not totally positive");
      });
      s->add_option("matrix", file)->required();
    }
    {
      auto& file = slot<std::string>();
      auto& method = slot<std::string>();
      method = "both";
      CLI::App* s = leaf(&app_, "tnn-check", "total nonnegativity", [&] {
        const RatMatrix a = load_matrix(file);
        Json j = Json::object();
        std::vector<std::string> lines;
        bool answer = true;
        std::optional<bool> brute, dd;
        if (method != "dd") {
          const TnnVerdict v = is_tnn_bruteforce(a);
          brute = v.is_tnn;
          j["bruteforce"] = {{"tnn", v.is_tnn}, {"minors_checked", all_minors(a).size()}};
          if (v.witness) {
            j["bruteforce"]["witness"] = to_string(*v.witness);
            j["bruteforce"]["witness_value"] = to_string(*v.witness_value);
            lines.push_back("witness " + to_string(*v.witness) + " = " + to_string(*v.witness_value));
          }
        }
        if (method != "brute") {
          const TnnTestResult t = tnn_test(a);
          dd = t.is_tnn;
          j["deleting_derivations"] = {{"tnn", t.is_tnn}, {"final", matrix_to_json(t.final)}};
          if (t.diagram) j["deleting_derivations"]["diagram"] = diagram_to_json(*t.diagram);
          if (!t.reason.empty()) j["deleting_derivations"]["reason"] = t.reason;
        }
        if (brute && dd && *brute != *dd) throw InvariantError("brute force and deleting derivations disagree");
        answer = brute ? *brute : *dd;
        j["tnn"] = answer;
        lines.insert(lines.begin(), answer ? "totally nonnegative" : "not totally nonnegative");
        return verdict(answer, std::move(j), join(lines));
      });
      s->add_option("matrix", file)->required();
      s->add_option("--method", method, "brute, dd or both")->check(CLI::IsMember({"brute", "dd", "both"}));
    }
  }

  void build_cauchon() {
    for (const bool restoring : {true, false}) {
      auto& file = slot<std::string>();
      auto& trace = slot<bool>();
      CLI::App* s = leaf(&app_, restoring ? "restore" : "delete",
                         restoring ? "restoration algorithm" : "deleting derivations algorithm", [&, restoring] {
                           std::vector<TraceEntry<Rat>> steps;
                           const RatMatrix a = load_matrix(file);
                           const RatMatrix out = restoring ? restoration(a, trace ? &steps : nullptr)
                                                           : deleting_derivations(a, trace ? &steps : nullptr);
                           Json j{{"result", matrix_to_json(out)}};
                           if (trace) j["trace"] = trace_json(steps);
                           return ok(std::move(j), (trace ? trace_text(steps) + "result:\n" : "") + matrix_to_csv(out));
                         });
      s->add_option("matrix", file)->required();
      s->add_flag("--trace", trace, "show every step");
    }
    {
      auto& file = slot<std::string>();
      auto& symbolic = slot<bool>();
      auto& ones = slot<bool>();
      CLI::App* s = leaf(&app_, "tc", "the matrix T_C of a diagram", [&] {
        const CauchonDiagram d = load_diagram(file);
        if (ones) {
          const RatMatrix t = rational_TC(d);
          return ok(matrix_to_json(t), matrix_to_csv(t));
        }
        const auto t = symbolic_TC(d);
        std::string text;
        for (std::size_t r = 0; r < t.rows(); ++r) {
          for (std::size_t c = 0; c < t.cols(); ++c) text += (c ? "  " : "") + t(r, c).to_string();
          text += '\n';
        }
        return ok(matrix_to_json_with(t, [](const RatFunc& f) { return f.to_string(); }), text);
      });
      s->add_option("--diagram", file)->required();
      auto* sym = s->add_flag("--symbolic", symbolic, "entries in t[i,j] (the default)");
      s->add_flag("--ones", ones, "every white cell set to 1")->excludes(sym);
    }
    {
      auto& file = slot<std::string>();
      auto& backend = slot<std::string>();
      auto& no_prefilter = slot<bool>();
      backend = "exact";
      CLI::App* s = leaf(&app_, "vanish", "minors of T_C that vanish identically", [&] {
        VanishingOptions opt;
        opt.backend = backend == "exact" ? ZeroTest::Exact : ZeroTest::Probabilistic;
        opt.prefilter = !no_prefilter;
        const MinorFamily f = vanishing_family(load_diagram(file), opt);
        std::vector<std::string> lines;
        for (const auto& ix : f.members) lines.push_back(to_string(ix));
        return ok(family_to_json(f), join(lines));
      });
      s->add_option("--diagram", file)->required();
      s->add_option("--backend", backend, "exact or modp")->check(CLI::IsMember({"exact", "modp"}));
      s->add_flag("--no-prefilter", no_prefilter, "expand every minor symbolically");
    }
  }

  void build_diagram() {
    CLI::App* g = group("diagram", "Cauchon diagrams");
    {
      auto& m = slot<std::size_t>();
      auto& p = slot<std::size_t>();
      auto& count_only = slot<bool>();
      CLI::App* s = leaf(g, "enum", "every m x p Cauchon diagram", [&] {
        std::size_t count = 0;
        Json list = Json::array();
        std::string text;
        for_each_diagram(m, p, [&](const CauchonDiagram& d) {
          ++count;
          if (count_only) return;
          list.push_back(diagram_to_json(d));
          text += to_ascii(d) + "\n";
        });
        Json j{{"m", m}, {"p", p}, {"count", count}};
        if (!count_only) j["diagrams"] = list;
        return ok(std::move(j), text + std::to_string(count) + " diagrams");
      });
      s->add_option("m", m)->required()->check(CLI::Range(1, 8));
      s->add_option("p", p)->required()->check(CLI::Range(1, 8));
      s->add_flag("--count", count_only, "only the number");
    }
    {
      auto& file = slot<std::string>();
      CLI::App* s = leaf(g, "check", "is a filling a Cauchon diagram", [&] {
        const Grid grid = parse_grid(read_file(file));
        const bool yes = is_cauchon(grid);
        Json j{{"cauchon", yes}, {"le", to_le(grid)}, {"m", grid.rows()}, {"p", grid.cols()}};
        return verdict(yes, std::move(j), yes ? "Cauchon diagram" : "not a Cauchon diagram");
      });
      s->add_option("diagram", file)->required();
    }
  }

  void build_network() {
    CLI::App* g = group("network", "planar networks");
    {
      auto& file = slot<std::string>();
      auto& dot = slot<bool>();
      CLI::App* s = leaf(g, "from-diagram", "Postnikov network of a diagram", [&] {
        const PlanarNetwork net = postnikov_network(load_diagram(file));
        const Json j = network_to_json(net);
        return ok(j, dot ? network_to_dot(net) : j.dump(2));
      });
      s->add_option("--diagram", file)->required();
      s->add_flag("--dot", dot, "text output in DOT");
    }
    {
      auto& net_file = slot<std::string>();
      auto& diag_file = slot<std::string>();
      CLI::App* s = leaf(g, "path-matrix", "weighted path counts", [&] {
        const RatMatrix pm = path_matrix(network_input(net_file, diag_file));
        return ok(matrix_to_json(pm), matrix_to_csv(pm));
      });
      s->add_option("--network", net_file);
      s->add_option("--diagram", diag_file);
    }
    {
      auto& net_file = slot<std::string>();
      auto& diag_file = slot<std::string>();
      auto& rows = slot<std::string>();
      auto& cols = slot<std::string>();
      CLI::App* s = leaf(g, "lindstrom", "minor of the path matrix against disjoint path families", [&] {
        const PlanarNetwork net = network_input(net_file, diag_file);
        const MinorIndex ix(index_list(rows), index_list(cols));
        const Rat det = minor(path_matrix(net), ix);
        const Rat fam = nonintersecting_count(net, ix.rows, ix.cols);
        Json j{{"minor", to_string(ix)}, {"determinant", to_string(det)}, {"families", to_string(fam)}, {"equal", det == fam}};
        return verdict(det == fam, std::move(j),
                       to_string(ix) + ": minor " + to_string(det) + ", path families " + to_string(fam));
      });
      s->add_option("--network", net_file);
      s->add_option("--diagram", diag_file);
      s->add_option("--rows", rows)->required();
      s->add_option("--cols", cols)->required();
    }
  }

  void build_perm() {
    CLI::App* g = group("perm", "restricted permutations");
    {
      auto& m = slot<std::size_t>();
      auto& p = slot<std::size_t>();
      CLI::App* s = leaf(g, "enum", "the set S for shape m x p", [&] {
        Json list = Json::array();
        std::vector<std::string> lines;
        for (const auto& w : enumerate_S(m, p)) {
          list.push_back({{"one_line", to_one_line(w.w)}, {"cycles", to_cycles(w.w)}, {"length", w.w.length()}});
          lines.push_back(to_one_line(w.w) + "  " + to_cycles(w.w));
        }
        lines.push_back(std::to_string(list.size()) + " permutations");
        return ok({{"m", m}, {"p", p}, {"count", list.size()}, {"permutations", list}}, join(lines));
      });
      s->add_option("m", m)->required()->check(CLI::Range(1, 8));
      s->add_option("p", p)->required()->check(CLI::Range(1, 8));
    }
    {
      auto& file = slot<std::string>();
      auto& inverse = slot<std::string>();
      auto& m = slot<std::size_t>();
      auto& p = slot<std::size_t>();
      CLI::App* s = leaf(g, "pipedream", "permutation of a diagram, or back with --inverse", [&] {
        if (!inverse.empty()) {
          if (m == 0 || p == 0) throw DomainError("--inverse needs --m and --p");
          const CauchonDiagram d = inverse_pipe_dream(RestrictedPermutation(m, p, parse_permutation(inverse, m + p)));
          return ok(diagram_to_json(d), to_ascii(d));
        }
        if (file.empty()) throw DomainError("give --diagram or --inverse");
        const RestrictedPermutation w = pipe_dream(load_diagram(file));
        return ok({{"one_line", to_one_line(w.w)}, {"cycles", to_cycles(w.w)}}, to_one_line(w.w));
      });
      s->add_option("--diagram", file);
      s->add_option("--inverse", inverse, "a permutation");
      s->add_option("--m", m);
      s->add_option("--p", p);
    }
    {
      auto& w_text = slot<std::string>();
      auto& m = slot<std::size_t>();
      auto& p = slot<std::size_t>();
      CLI::App* s = leaf(g, "mw", "the minor family M(w)", [&] {
        const MinorFamily f = M_of_w(RestrictedPermutation(m, p, parse_permutation(w_text, m + p)));
        std::vector<std::string> lines;
        for (const auto& ix : f.members) lines.push_back(to_string(ix));
        return ok(family_to_json(f), join(lines));
      });
      s->add_option("w", w_text, "one-line or cycle notation")->required();
      s->add_option("--m", m)->required();
      s->add_option("--p", p)->required();
    }
    {
      auto& u = slot<std::string>();
      auto& w = slot<std::string>();
      auto& n = slot<std::size_t>();
      CLI::App* s = leaf(g, "bruhat", "is u <= w in Bruhat order", [&] {
        const Permutation a = parse_permutation(u, n), b = parse_permutation(w, n);
        if (a.size() != b.size()) throw DomainError("permutations of different sizes; pass --n");
        const bool yes = bruhat_leq(a, b);
        return verdict(yes, {{"leq", yes}}, yes ? "yes" : "no");
      });
      s->add_option("u", u)->required();
      s->add_option("w", w)->required();
      s->add_option("--n", n, "size, for cycle notation");
    }
  }

  void build_cells() {
    CLI::App* g = group("cells", "admissible families and cells");
    {
      auto& m = slot<std::size_t>();
      auto& p = slot<std::size_t>();
      auto& out = slot<std::string>();
      CLI::App* s = leaf(g, "enum", "one descriptor per diagram", [&] {
        Json list = Json::array();
        std::string text;
        for (const auto& d : admissible_families(m, p)) {
          list.push_back(descriptor_to_json(d));
          text += to_one_line(d.permutation.w) + "  " + std::to_string(d.family.size()) + " minors\n" +
                  to_ascii(d.diagram) + "\n";
        }
        if (!out.empty()) {
          std::ofstream f(out);
          if (!f) throw DomainError("cannot write " + out);
          f << list.dump(2) << "\n";
        }
        return ok({{"m", m}, {"p", p}, {"count", list.size()}, {"cells", list}},
                  text + std::to_string(list.size()) + " admissible families");
      });
      s->add_option("m", m)->required()->check(CLI::Range(1, 8));
      s->add_option("p", p)->required()->check(CLI::Range(1, 8));
      s->add_option("--out", out, "write the descriptors as JSON");
    }
    {
      auto& file = slot<std::string>();
      CLI::App* s = leaf(g, "admissible", "does a family of minors cut out a nonempty cell", [&] {
        const AdmissibleVerdict v = is_admissible(load_family(file));
        Json j{{"admissible", v.admissible}};
        std::string text = v.admissible ? "admissible" : "not admissible";
        if (v.descriptor) {
          j["descriptor"] = descriptor_to_json(*v.descriptor);
          text += "\n" + to_ascii(v.descriptor->diagram) + to_one_line(v.descriptor->permutation.w);
        }
        return verdict(v.admissible, std::move(j), text);
      });
      s->add_option("--family", file)->required();
    }
    {
      auto& file = slot<std::string>();
      CLI::App* s = leaf(g, "of", "the cell of a TNN matrix", [&] {
        const CellDescriptor d = cell_of(load_matrix(file));
        std::vector<std::string> lines{to_one_line(d.permutation.w)};
        for (const auto& ix : d.family.members) lines.push_back(to_string(ix));
        return ok(descriptor_to_json(d), to_ascii(d.diagram) + join(lines));
      });
      s->add_option("--matrix", file)->required();
    }
    {
      auto& m = slot<std::size_t>();
      auto& p = slot<std::size_t>();
      auto& jobs = slot<unsigned>();
      jobs = 1;
      CLI::App* s = leaf(g, "verify", "diagram, permutation and witness routes agree", [&] {
        const UnifyingReport r = unifying_check(m, p, jobs);
        Json mism = Json::array();
        std::vector<std::string> lines{std::to_string(r.agreed) + "/" + std::to_string(r.checked) + " agree"};
        for (const auto& mm : r.mismatches) {
          mism.push_back({{"diagram", diagram_to_json(mm.diagram)}, {"detail", mm.detail}});
          lines.push_back(to_ascii(mm.diagram) + mm.detail);
        }
        return verdict(r.ok(), {{"m", m}, {"p", p}, {"checked", r.checked}, {"agreed", r.agreed}, {"mismatches", mism}},
                       join(lines));
      });
      s->add_option("m", m)->required()->check(CLI::Range(1, 8));
      s->add_option("p", p)->required()->check(CLI::Range(1, 8));
      s->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    }
  }

  void build_quantum() {
    CLI::App* g = group("quantum", "quantum matrices");
    auto shape = [this](CLI::App* s) {
      auto& m = slot<std::size_t>();
      auto& p = slot<std::size_t>();
      m = p = 2;
      s->add_option("--m", m);
      s->add_option("--p", p);
      return std::pair<std::size_t*, std::size_t*>{&m, &p};
    };
    {
      auto& expr = slot<std::string>();
      auto* s = g->add_subcommand("nf", "normal form");
      const auto [m, p] = shape(s);
      s->add_option("expr", expr)->required();
      s->add_option("--format", format_)->check(CLI::IsMember({"json", "text"}));
      s->callback([this, &expr, m = m, p = p] {
        action_ = [&expr, m, p] {
          const QPoly f = QAlgebra::create(*m, *p)->parse(expr);
          return ok({{"normal_form", f.to_string()}}, f.to_string());
        };
      });
    }
    {
      auto& rows = slot<std::string>();
      auto& cols = slot<std::string>();
      auto* s = g->add_subcommand("minor", "quantum minor");
      const auto [m, p] = shape(s);
      s->add_option("--rows", rows)->required();
      s->add_option("--cols", cols)->required();
      s->add_option("--format", format_)->check(CLI::IsMember({"json", "text"}));
      s->callback([this, &rows, &cols, m = m, p = p] {
        action_ = [&rows, &cols, m, p] {
          const QPoly f = QAlgebra::create(*m, *p)->quantum_minor(index_list(rows), index_list(cols));
          return ok({{"minor", f.to_string()}}, f.to_string());
        };
      });
    }
    {
      auto& f = slot<std::string>();
      auto& h = slot<std::string>();
      auto* s = g->add_subcommand("comm", "commutator fg - gf");
      const auto [m, p] = shape(s);
      s->add_option("f", f)->required();
      s->add_option("g", h)->required();
      s->add_option("--format", format_)->check(CLI::IsMember({"json", "text"}));
      s->callback([this, &f, &h, m = m, p = p] {
        action_ = [&f, &h, m, p] {
          const auto alg = QAlgebra::create(*m, *p);
          const QPoly c = alg->commutator(alg->parse(f), alg->parse(h));
          return ok({{"commutator", c.to_string()}, {"zero", c.is_zero()}}, c.to_string());
        };
      });
    }
  }

  void build_poisson() {
    CLI::App* g = group("poisson", "the standard Poisson bracket");
    auto shape = [this](CLI::App* s) {
      auto& m = slot<std::size_t>();
      auto& p = slot<std::size_t>();
      m = p = 2;
      s->add_option("--m", m);
      s->add_option("--p", p);
      s->add_option("--format", format_)->check(CLI::IsMember({"json", "text"}));
      return std::pair<std::size_t*, std::size_t*>{&m, &p};
    };
    {
      auto& f = slot<std::string>();
      auto& h = slot<std::string>();
      auto* s = g->add_subcommand("bracket", "{f, g}");
      const auto [m, p] = shape(s);
      s->add_option("f", f)->required();
      s->add_option("g", h)->required();
      s->callback([this, &f, &h, m = m, p = p] {
        action_ = [&f, &h, m, p] {
          const PoissonRing R(*m, *p);
          const MPoly b = R.bracket(R.parse(f), R.parse(h));
          return ok({{"bracket", b.to_string()}}, b.to_string());
        };
      });
    }
    {
      auto& exprs = slot<std::vector<std::string>>();
      auto* s = g->add_subcommand("jacobi", "{f,{g,h}} + {g,{h,f}} + {h,{f,g}}");
      const auto [m, p] = shape(s);
      s->add_option("exprs", exprs, "f g h")->required()->expected(3);
      s->callback([this, &exprs, m = m, p = p] {
        action_ = [&exprs, m, p] {
          const PoissonRing R(*m, *p);
          const MPoly j = R.jacobi(R.parse(exprs[0]), R.parse(exprs[1]), R.parse(exprs[2]));
          return verdict(j.is_zero(), {{"jacobiator", j.to_string()}, {"zero", j.is_zero()}}, j.to_string());
        };
      });
    }
    {
      auto* s = g->add_subcommand("semiclassical", "commutators over (q - 1) at q = 1 against the bracket");
      const auto [m, p] = shape(s);
      s->callback([this, m = m, p = p] {
        action_ = [m, p] {
          const int n = static_cast<int>(*m * *p), pi = static_cast<int>(*p);
          Json pairs = Json::array();
          std::size_t agreed = 0, checked = 0;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              if (x == y) continue;
              const auto r = semiclassical_check(*m, *p, x / pi + 1, x % pi + 1, y / pi + 1, y % pi + 1);
              ++checked;
              agreed += r.agrees;
              pairs.push_back({{"u", {x / pi + 1, x % pi + 1}},
                               {"v", {y / pi + 1, y % pi + 1}},
                               {"quantum", r.from_quantum.to_string()},
                               {"bracket", r.from_table.to_string()},
                               {"agrees", r.agrees}});
            }
          return verdict(agreed == checked, {{"checked", checked}, {"agreed", agreed}, {"pairs", pairs}},
                         std::to_string(agreed) + "/" + std::to_string(checked) + " agree");
        };
      });
    }
    {
      auto& path = slot<std::string>();
      auto& H = slot<std::string>();
      auto& samples = slot<int>();
      samples = 100;
      auto* s = g->add_subcommand("flow", "is a path a flow of the Hamiltonian H");
      s->add_option("--path", path)->required();
      s->add_option("--H", H)->required();
      s->add_option("--samples", samples)->check(CLI::Range(2, 100000));
      s->add_option("--format", format_)->check(CLI::IsMember({"json", "text"}));
      s->callback([this, &path, &H, &samples] {
        action_ = [&path, &H, &samples] {
          const FlowPath fp = flow_from_json(Json::parse(read_file(path)));
          const PoissonRing R(fp.m, fp.p);
          const FlowResidual r = verify_flow(fp, R.parse(H), R, samples);
          const bool yes = r.exact_zero || r.max_numeric < 1e-9L;
          Json j{{"exact_zero", r.exact_zero},
                 {"max_residual", static_cast<double>(r.max_numeric)},
                 {"residuals", r.residuals},
                 {"flow", yes}};
          std::string text = yes ? "flow" : "not a flow";
          text += " (max residual " + std::to_string(static_cast<double>(r.max_numeric)) + ")";
          return verdict(yes, std::move(j), text);
        };
      });
    }
  }

  void build_verify() {
    CLI::App* g = group("verify", "batch cross-checks");
    auto& m = slot<std::size_t>();
    auto& p = slot<std::size_t>();
    auto& jobs = slot<unsigned>();
    m = p = 2;
    jobs = 1;
    CLI::App* s = leaf(g, "all", "unifying theorem, Lindstrom, semiclassical limit and flows",
                       [&] { return verify_all(m, p, jobs); });
    s->add_option("--m", m)->check(CLI::Range(1, 8));
    s->add_option("--p", p)->check(CLI::Range(1, 8));
    s->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  }

  CLI::App app_;
  std::string format_ = "text";
  Action action_;
  std::vector<std::shared_ptr<void>> keep_;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Cli cli;
  return cli.run(args);
}

}  // namespace cauchon::cli
