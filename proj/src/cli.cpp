#include "srg/cli.hpp"

#include <omp.h>

#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "srg/eigenbasis3.hpp"
#include "srg/errors.hpp"
#include "srg/kernels.hpp"
#include "srg/lattice_graph.hpp"
#include "srg/permutohedra.hpp"
#include "srg/rook_eigen.hpp"
#include "srg/spectral_analysis.hpp"

namespace srg::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "srg-report/1";
// Lattice-line rank in the permutohedra command is skipped above this N.
constexpr std::size_t kSpanRankCap = 1000;

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> t{
      {"spectrum", Command::spectrum},         {"eigenbasis", Command::eigenbasis},
      {"trees", Command::trees},               {"permutohedra", Command::permutohedra},
      {"mahonian", Command::mahonian},         {"induced", Command::induced},
      {"quotient", Command::quotient},         {"independence", Command::independence},
      {"scan", Command::scan}};
  return t;
}

json header(Command c) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command_name(c);
  return j;
}

json pairs_json(const std::map<long, std::size_t>& m) {
  json a = json::array();
  for (auto it = m.rbegin(); it != m.rend(); ++it) a.push_back({it->first, it->second});
  return a;
}

std::string pairs_text(const std::map<long, std::size_t>& m) {
  std::string s;
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    s += (s.empty() ? "" : " ") + std::to_string(it->first) + "^" + std::to_string(it->second);
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Shared state for one invocation.
struct Runner {
  const RunConfig& cfg;
  std::ostream& out;
  std::ostream& err;
  std::size_t cap;
  Execution exec = Execution::parallel;
  bool discrepancy = false;
  bool csv_header_done = false;

  void emit(const json& j) { out << j.dump() << '\n'; }
  void csv_header(const char* cols) {
    if (!csv_header_done) out << cols << '\n';
    csv_header_done = true;
  }

  int need_d() const {
    if (!cfg.d) throw UsageError("--d is required for " + command_name(cfg.command));
    return *cfg.d;
  }
  std::pair<int, int> need_n() const {
    if (!cfg.n_range) throw UsageError("--n or --n-range is required for " + command_name(cfg.command));
    return *cfg.n_range;
  }

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  void spectrum() {
    const int d = need_d();
    const auto [lo, hi] = need_n();
    const auto screen = cfg.exact_only ? spectral::Screen::exact_only : spectral::Screen::float_screen;
    for (int n = lo; n <= hi; ++n) {
      const SRGraph g(d, n, cap);
      const auto s = spectral::integral_spectrum(g, screen, exec);
      if (!s.certified) discrepancy = true;
      if (cfg.format == Format::csv) {
        csv_header("d,n,eigenvalue,multiplicity,certified");
        spectral::write_spectrum_csv(s, d, n, out, false);
      } else if (cfg.format == Format::text) {
        out << "SR(" << d << "," << n << ") N=" << g.size() << (s.certified ? " certified: " : " NOT certified: ")
            << pairs_text(s.pairs) << '\n';
      } else {
        json j = header(cfg.command);
        j["d"] = d;
        j["n"] = n;
        j["N"] = g.size();
        j["method"] = s.method;
        j["certified"] = s.certified;
        j["non_integral"] = s.non_integral;
        j["spectrum"] = pairs_json(s.pairs);
        j["laplacian_spectrum"] = pairs_json(spectral::laplacian_spectrum(s.pairs, g.degree()));
        json ev = json::array();
        for (const auto& [v, res] : s.evidence) ev.push_back({{"eigenvalue", v}, {"residual", res}});
        j["evidence"] = std::move(ev);
        emit(j);
      }
    }
  }

  void eigenbasis() {
    if (cfg.d && *cfg.d != 3) throw UsageError("eigenbasis is defined for d = 3 only");
    const auto [lo, hi] = need_n();
    for (int n = lo; n <= hi; ++n) {
      const auto basis = eigen3::full_eigenbasis(n, eigen3::kExactRankLimit, exec);
      const auto got = basis.multiplicities();
      const auto want = eigen3::theorem_table(n);
      const bool ok = got == want && basis.independent;
      if (!ok) discrepancy = true;
      if (cfg.format == Format::csv) {
        csv_header("n,eigenvalue,multiplicity,expected,independent");
        auto all = want;
        for (const auto& [l, m] : got) all.emplace(l, 0);
        for (auto it = all.rbegin(); it != all.rend(); ++it) {
          const auto g = got.count(it->first) ? got.at(it->first) : 0;
          const auto w = want.count(it->first) ? want.at(it->first) : 0;
          out << n << ',' << it->first << ',' << g << ',' << w << ',' << yes_no(basis.independent) << '\n';
        }
      } else if (cfg.format == Format::text) {
        out << "n=" << n << " vectors=" << basis.claims.size() << " independent=" << yes_no(basis.independent)
            << " (" << basis.independence_method << ") table=" << (got == want ? "match" : "MISMATCH") << ": "
            << pairs_text(got) << '\n';
      } else {
        json j = header(cfg.command);
        j["n"] = n;
        j["N"] = vertex_count(3, n);
        j["count"] = basis.claims.size();
        j["matches_table"] = got == want;
        j["independent"] = basis.independent;
        j["independence_method"] = basis.independence_method;
        j["multiplicities"] = pairs_json(got);
        std::ostringstream claims;
        eigen3::write_eigenbasis_json(basis, claims);
        j["claims"] = json::parse(claims.str());
        emit(j);
      }
    }
  }

  void trees() {
    if (cfg.d && *cfg.d != 3) throw UsageError("the spanning-tree formula is for d = 3");
    const auto [lo, hi] = need_n();
    for (int n = lo; n <= hi; ++n) {
      const BigInt f = spectral::spanning_trees_formula(n);
      const SRGraph g(3, n, cap);
      const BigInt m = spectral::spanning_trees_matrix_tree(g, 0, spectral::kMatrixTreeCap, exec);
      if (f != m) discrepancy = true;
      if (cfg.format == Format::csv) {
        csv_header("n,formula,matrix_tree,agree");
        out << n << ',' << f << ',' << m << ',' << yes_no(f == m) << '\n';
      } else if (cfg.format == Format::text) {
        out << "n=" << n << " formula=" << f << " matrix_tree=" << m << (f == m ? " agree" : " DIFFER") << '\n';
      } else {
        json j = header(cfg.command);
        j["n"] = n;
        j["formula"] = f.get_str();
        j["matrix_tree"] = m.get_str();
        j["agree"] = f == m;
        emit(j);
      }
    }
  }

  void permutohedra() {
    const int d = need_d();
    const auto [lo, hi] = need_n();
    for (int n = lo; n <= hi; ++n) {
      const SRGraph g(d, n, cap);
      const auto family = perm::verify_permutohedron_family(g, exec);
      const bool all_eigen = family.failures == 0;
      const bool count_ok = family.count == perm::center_count(d, n);
      std::optional<perm::SpanReport> span;
      if (g.size() <= kSpanRankCap) span = perm::span_conjecture_check(d, n, cap, exec);
      if (!all_eigen || !count_ok || (span && !span->rank_sum_equals_N)) discrepancy = true;
      const std::string ratio = perm::coverage_ratio(d, n).get_str();
      if (cfg.format == Format::csv) {
        csv_header("d,n,N,num_centers,all_eigenvectors,rank_lines,rank_sum_equals_N,coverage_ratio");
        out << d << ',' << n << ',' << g.size() << ',' << family.count << ',' << yes_no(all_eigen) << ','
            << (span ? std::to_string(span->rank_lines) : "") << ','
            << (span ? yes_no(span->rank_sum_equals_N) : "") << ',' << ratio << '\n';
      } else if (cfg.format == Format::text) {
        out << "SR(" << d << "," << n << ") centres=" << family.count
            << " eigenvectors=" << (all_eigen ? "ok" : "FAIL");
        if (span) out << " rank_lines=" << span->rank_lines << " span " << span->verdict;
        out << " coverage=" << ratio << '\n';
      } else {
        json j = header(cfg.command);
        j["d"] = d;
        j["n"] = n;
        j["N"] = g.size();
        j["num_centers"] = family.count;
        j["all_eigenvectors"] = all_eigen;
        j["rank_lines"] = span ? json(span->rank_lines) : json();
        j["rank_sum_equals_N"] = span ? json(span->rank_sum_equals_N) : json();
        j["verdict"] = span ? json(span->verdict) : json("not run");
        j["coverage_ratio"] = ratio;
        emit(j);
      }
    }
  }

  void mahonian() {
    const int d = need_d();
    const int top = d * (d - 1) / 2 - 1;
    const auto [lo, hi] = cfg.n_range.value_or(std::pair<int, int>{0, top});
    rook::MahonianOptions opt;
    opt.vertex_cap = cap;
    opt.exec = exec;
    for (int n = lo; n <= std::min(hi, top); ++n) {
      const auto r = rook::mahonian_eigenspace_check(d, n, opt);
      if (!r.passed()) discrepancy = true;
      if (cfg.format == Format::csv) {
        csv_header("d,n,N,mahonian,num_vectors,rank,exact_nullity,min_eig_float,passed");
        out << d << ',' << n << ',' << r.N << ',' << r.mahonian << ',' << r.num_vectors << ',' << r.rank << ','
            << (r.exact_nullity ? std::to_string(*r.exact_nullity) : "") << ','
            << (r.min_eig_float ? std::to_string(*r.min_eig_float) : "") << ',' << yes_no(r.passed()) << '\n';
      } else if (cfg.format == Format::text) {
        out << "SR(" << d << "," << n << ") M=" << r.mahonian << " rank=" << r.rank << " nullity="
            << (r.exact_nullity ? std::to_string(*r.exact_nullity) : "?") << (r.passed() ? " ok" : " FAIL") << '\n';
      } else {
        json j = header(cfg.command);
        json body = json::parse(rook::mahonian_report_json(r));
        j.update(body);
        emit(j);
      }
    }
  }

  void induced() {
    std::vector<Permutation> perms;
    if (cfg.pi) {
      perms.push_back(Permutation::parse(*cfg.pi));
    } else {
      perms = all_permutations(need_d());
    }
    std::map<int, std::unique_ptr<SRGraph>> graphs;
    for (const auto& pi : perms) {
      const int n = pi.inversions();
      auto& g = graphs[n];
      if (!g) g = std::make_unique<SRGraph>(pi.size(), n, cap);
      const auto r = rook::induced_subgraph_check(*g, pi, exec);
      if (!r.regular || !r.laplacian_integral) discrepancy = true;
      if (cfg.format == Format::csv) {
        csv_header("pi,n,size,regular,laplacian_integral,distinct_eigs");
        out << pi.str() << ',' << n << ',' << r.vertices.size() << ',' << yes_no(r.regular) << ','
            << yes_no(r.laplacian_integral) << ',' << r.distinct_eigs << '\n';
      } else if (cfg.format == Format::text) {
        out << pi.str() << " n=" << n << " size=" << r.vertices.size() << " regular=" << yes_no(r.regular)
            << " laplacian_integral=" << yes_no(r.laplacian_integral) << " " << pairs_text(r.laplacian_spectrum)
            << '\n';
      } else {
        json j = header(cfg.command);
        j.update(json::parse(rook::induced_report_json(r)));
        emit(j);
      }
    }
  }

  void quotient() {
    const int d = need_d();
    const auto [lo, hi] = need_n();
    spectral::QuotientOptions opt;
    opt.exec = exec;
    opt.containment_vertex_cap = std::min(opt.containment_vertex_cap, cap);
    for (int n = lo; n <= hi; ++n) {
      const auto r = spectral::quotient_spectrum_integral(d, n, opt);
      if (!r.integral || (r.contained_in_A && !*r.contained_in_A)) discrepancy = true;
      if (cfg.format == Format::csv) {
        csv_header("d,n,k,eigenvalue,multiplicity,integral");
        for (auto it = r.spectrum.rbegin(); it != r.spectrum.rend(); ++it)
          out << d << ',' << n << ',' << r.k << ',' << it->first << ',' << it->second << ',' << yes_no(r.integral)
              << '\n';
      } else if (cfg.format == Format::text) {
        out << "P(SR(" << d << "," << n << ")) k=" << r.k << (r.integral ? " integral: " : " NOT integral: ")
            << pairs_text(r.spectrum) << '\n';
      } else {
        json j = header(cfg.command);
        j.update(json::parse(spectral::quotient_report_json(r)));
        emit(j);
      }
    }
  }

  void independence() {
    const int d = need_d();
    const auto [lo, hi] = need_n();
    for (int n = lo; n <= hi; ++n) {
      const SRGraph g(d, n, cap);
      const int alpha = spectral::independence_number(g);
      std::optional<Rational> bound;
      if (n >= d * (d - 1) / 2) bound = spectral::ratio_bound(d, n);
      const bool within = !bound || Rational(alpha) <= *bound;
      if (!within) discrepancy = true;
      if (cfg.format == Format::csv) {
        csv_header("d,n,N,alpha,ratio_bound,within_bound");
        out << d << ',' << n << ',' << g.size() << ',' << alpha << ',' << (bound ? bound->get_str() : "") << ','
            << yes_no(within) << '\n';
      } else if (cfg.format == Format::text) {
        out << "SR(" << d << "," << n << ") alpha=" << alpha;
        if (bound) out << " ratio_bound=" << bound->get_str();
        out << '\n';
      } else {
        json j = header(cfg.command);
        j["d"] = d;
        j["n"] = n;
        j["N"] = g.size();
        j["alpha"] = alpha;
        j["ratio_bound"] = bound ? json(bound->get_str()) : json();
        j["within_bound"] = within;
        emit(j);
      }
    }
  }

  int scan() {
    std::pair<int, int> ds;
    if (cfg.d_range) ds = *cfg.d_range;
    else ds = {need_d(), need_d()};
    const auto [lo, hi] = need_n();
    const auto screen = cfg.exact_only ? spectral::Screen::exact_only : spectral::Screen::float_screen;
    std::size_t certified = 0, uncertified = 0, non_integral = 0, errors = 0;
    for (int d = ds.first; d <= ds.second; ++d)
      for (int n = lo; n <= hi; ++n) {
        json j = header(cfg.command);
        j["d"] = d;
        j["n"] = n;
        std::string status;
        std::string text;
        try {
          const SRGraph g(d, n, cap);
          const auto s = spectral::integral_spectrum(g, screen, exec);
          status = s.certified ? "certified" : (s.non_integral ? "non-integral" : "uncertified");
          j["N"] = g.size();
          j["distinct_eigenvalues"] = s.pairs.size();
          j["spectrum"] = pairs_json(s.pairs);
          text = pairs_text(s.pairs);
        } catch (const ResourceError& e) {
          status = "error";
          j["error"] = e.what();
          text = e.what();
        }
        if (status == "certified") ++certified;
        else if (status == "non-integral") ++non_integral;
        else if (status == "uncertified") ++uncertified;
        else ++errors;
        j["status"] = status;
        if (cfg.format == Format::csv) {
          csv_header("d,n,status,distinct_eigenvalues");
          out << d << ',' << n << ',' << status << ',' << (j.contains("distinct_eigenvalues") ? j["distinct_eigenvalues"].dump() : "")
              << '\n';
        } else if (cfg.format == Format::text) {
          out << "SR(" << d << "," << n << ") " << status << ": " << text << '\n';
        } else {
          emit(j);
        }
        out.flush();
      }
    json v = header(cfg.command);
    v["verdict"] = {{"certified", certified}, {"uncertified", uncertified}, {"non_integral", non_integral},
                    {"errors", errors}};
    if (cfg.format == Format::json) emit(v);
    else if (cfg.format == Format::text)
      out << "verdict: certified=" << certified << " uncertified=" << uncertified << " non_integral=" << non_integral
          << " errors=" << errors << '\n';
    if (uncertified || non_integral) return kDiscrepancy;
    return errors ? kUsage : kPass;
  }
};

}  // namespace

std::optional<Command> parse_command(const std::string& s) {
  const auto& t = command_table();
  const auto it = t.find(s);
  if (it == t.end()) return std::nullopt;
  return it->second;
}

std::string command_name(Command c) {
  for (const auto& [name, cmd] : command_table())
    if (cmd == c) return name;
  return "?";
}

std::optional<std::pair<int, int>> parse_range(const std::string& s) {
  auto to_int = [](const std::string& t) -> std::optional<int> {
    if (t.empty()) return std::nullopt;
    std::size_t used = 0;
    try {
      const int v = std::stoi(t, &used);
      if (used != t.size()) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = to_int(s);
    if (!v) return std::nullopt;
    return std::pair{*v, *v};
  }
  const auto a = to_int(s.substr(0, dots));
  const auto b = to_int(s.substr(dots + 2));
  if (!a || !b || *a > *b) return std::nullopt;
  return std::pair{*a, *b};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.jobs > 0) omp_set_num_threads(config.jobs);
  Runner r{config, out, err, config.vertex_cap ? config.vertex_cap : default_vertex_cap()};
  try {
    switch (config.command) {
      case Command::spectrum: r.spectrum(); break;
      case Command::eigenbasis: r.eigenbasis(); break;
      case Command::trees: r.trees(); break;
      case Command::permutohedra: r.permutohedra(); break;
      case Command::mahonian: r.mahonian(); break;
      case Command::induced: r.induced(); break;
      case Command::quotient: r.quotient(); break;
      case Command::independence: r.independence(); break;
      case Command::scan: return r.scan();
    }
  } catch (const Runner::UsageError& e) {
    err << "srg: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "srg: resource limit: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "srg: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "srg: " << e.what() << '\n';
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "srg: internal consistency failure: " << e.what() << '\n';
    return kDiscrepancy;
  }
  return r.discrepancy ? kDiscrepancy : kPass;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial rook graph spectra and eigenvector harnesses"};
  std::string command, n_range, d_range, pi, format = "json";
  std::optional<int> d, n;
  std::size_t vertex_cap = 0;
  bool exact_only = false;
  int jobs = 0;
  app.add_option("command", command,
                 "spectrum | eigenbasis | trees | permutohedra | mahonian | induced | quotient | independence | scan")
      ->required();
  app.add_option("--d", d, "dimension d (number of coordinates)");
  app.add_option("--n", n, "single n");
  app.add_option("--n-range", n_range, "inclusive range a..b");
  app.add_option("--d-range", d_range, "inclusive range of d for scan");
  app.add_option("--pi", pi, "one permutation in one-line notation (induced)");
  app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--vertex-cap", vertex_cap, "largest graph to build (default $SRG_VERTEX_CAP or 200000)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--exact-only", exact_only, "skip the float screen; test every integer in [-delta, delta]");
  app.add_option("--jobs", jobs, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  RunConfig cfg;
  const auto cmd = parse_command(command);
  if (!cmd) {
    err << "srg: unknown command '" << command << "'\n";
    return kUsage;
  }
  cfg.command = *cmd;
  cfg.d = d;
  if (n && !n_range.empty()) {
    err << "srg: give either --n or --n-range, not both\n";
    return kUsage;
  }
  if (n) cfg.n_range = std::pair{*n, *n};
  if (!n_range.empty()) {
    cfg.n_range = parse_range(n_range);
    if (!cfg.n_range) {
      err << "srg: malformed range '" << n_range << "' (expected a..b with a <= b)\n";
      return kUsage;
    }
  }
  if (!d_range.empty()) {
    cfg.d_range = parse_range(d_range);
    if (!cfg.d_range) {
      err << "srg: malformed range '" << d_range << "'\n";
      return kUsage;
    }
  }
  if (!pi.empty()) cfg.pi = pi;
  cfg.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
  cfg.vertex_cap = vertex_cap;
  cfg.exact_only = exact_only;
  cfg.jobs = jobs;
  return run(cfg, out, err);
}

}  // namespace srg::cli
