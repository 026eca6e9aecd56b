#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "tightweb/assembly.hpp"
#include "tightweb/certify.hpp"
#include "tightweb/search.hpp"
#include "tightweb/simplicial.hpp"
#include "tightweb/spiderweb.hpp"
#include "tightweb/zhomology.hpp"

namespace tw = tightweb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

int run_search(int d, int k, bool no_dedup, int jobs, const std::string& out) {
  tw::SearchTask task;
  task.d = d;
  task.k = k;
  task.dedup = !no_dedup;
  task.jobs = jobs;
  task.out_dir = out;
  tw::SearchResult result = tw::search(task);
  std::cout << result.summary.to_line() << "\n";
  for (size_t i = 0; i < result.solutions.size(); ++i) {
    const tw::Solution& s = result.solutions[i];
    std::cout << "solution " << i << ": m =";
    for (int v : s.m.m) std::cout << ' ' << v;
    std::cout << "  key=" << tw::short_digest(s.canonical_key)
              << " verdict=" << tw::Certificate::verdict_name(s.verdict) << "\n";
  }
  return result.summary.aborted == 0 ? kExitOk : kExitRefuted;
}

int run_build(const std::string& deck_path, bool boundary, const std::string& out) {
  tw::DeckFile df = tw::read_deck_file(deck_path);
  tw::HandleComplex k = tw::build_handlebody(df.params, df.m, df.deck);
  tw::BoundaryReport br = tw::boundary_of(k);
  const tw::FacetComplex& chosen = boundary ? br.boundary : k.complex;
  auto comments = k.provenance_comments();
  if (boundary) comments.push_back("boundary complex");
  if (out.empty()) {
    tw::write_fct(std::cout, chosen, comments);
  } else {
    tw::write_fct_file(out, chosen, comments);
    std::cout << "wrote " << out << " (" << chosen.facets().size() << " facets, "
              << chosen.n_used_vertices() << " vertices)\n";
  }
  return kExitOk;
}

int run_certify(const std::string& path, int d_expected) {
  tw::FacetComplex x = tw::read_fct_file(path);
  if (d_expected >= 0 && x.dim() != d_expected) {
    std::cerr << "complex has dimension " << x.dim() << ", expected " << d_expected << "\n";
    return kExitUsage;
  }
  tw::Certificate cert = tw::certify_tight(x, std::filesystem::path(path).filename().string());
  std::cout << cert.to_text();
  return cert.verdict == tw::Certificate::Verdict::Tight ? kExitOk : kExitRefuted;
}

int run_family(int d, bool list, bool build, const std::string& out) {
  auto members = tw::family_generate(d);
  std::cout << "count=" << members.size() << "\n";
  if (list) {
    for (const auto& mem : members) {
      std::cout << "sigma =";
      for (int v : mem.deck.pairs[0].sigma) std::cout << ' ' << v;
      std::cout << "  tau =";
      for (int v : mem.deck.pairs[0].tau) std::cout << ' ' << v;
      std::cout << "\n";
    }
  }
  if (build) {
    std::filesystem::path dir(out.empty() ? "." : out);
    std::filesystem::create_directories(dir);
    for (size_t i = 0; i < members.size(); ++i) {
      const auto& mem = members[i];
      tw::HandleComplex k = tw::build_handlebody(mem.params, mem.m, mem.deck);
      tw::BoundaryReport br = tw::boundary_of(k);
      std::string stem = "family_d" + std::to_string(d) + "_" + std::to_string(i);
      tw::write_deck_file((dir / (stem + ".deck")).string(), {mem.params, mem.m, mem.deck});
      tw::write_fct_file((dir / (stem + "_K.fct")).string(), k.complex,
                         k.provenance_comments());
      tw::write_fct_file((dir / (stem + "_boundary.fct")).string(), br.boundary,
                         k.provenance_comments());
    }
    std::cout << "wrote " << members.size() << " members to " << dir.string() << "\n";
  }
  return kExitOk;
}

int run_betti(const std::string& path) {
  tw::FacetComplex x = tw::read_fct_file(path);
  tw::BettiVector b = tw::betti_z2(x);
  std::cout << "betti";
  for (long long v : b.beta) std::cout << ' ' << v;
  std::cout << "\n";
  return kExitOk;
}

int run_orient(const std::string& path) {
  tw::FacetComplex x = tw::read_fct_file(path);
  bool orientable = tw::is_orientable(x);
  std::cout << "orientable " << (orientable ? "true" : "false") << "\n";
  return kExitOk;
}

int run_tight_bruteforce(const std::string& path, int max_n) {
  tw::FacetComplex x = tw::read_fct_file(path);
  bool tight = tw::is_z2_tight_bruteforce(x, max_n);
  std::cout << "tight " << (tight ? "true" : "false") << "\n";
  return tight ? kExitOk : kExitRefuted;
}

int run_orbits(const std::string& path, int n) {
  tw::FacetComplex x = tw::read_fct_file(path);
  if (n <= 0) n = x.n_vertices();
  auto reps = tw::orbit_representatives(x, n);
  for (const tw::Face& f : reps) {
    std::cout << "orbit";
    for (int v : f) std::cout << ' ' << v;
    std::cout << "\n";
  }
  std::cout << "orbits=" << reps.size() << "\n";
  return kExitOk;
}

}  // namespace

namespace {

int run_main(int argc, char** argv) {
  CLI::App app{"tight triangulations of manifolds from spiderweb graphs and permutation decks"};
  app.require_subcommand(1);

  int d = 3, k = 0, jobs = 1, max_n = 16, orbits_n = 0, cert_d = -1;
  bool no_dedup = false, want_boundary = false, fam_list = false, fam_build = false;
  std::string out, deck_path, file_path;

  auto* search_cmd = app.add_subcommand("search", "enumerate solutions for fixed d and k");
  search_cmd->add_option("--d", d, "manifold dimension")->required();
  search_cmd->add_option("--k", k, "genus parameter k")->required();
  search_cmd->add_flag("--no-dedup", no_dedup, "report every (m, deck) configuration");
  search_cmd->add_option("--jobs", jobs, "worker threads");
  search_cmd->add_option("--out", out, "directory for .deck/.fct output");

  auto* build_cmd = app.add_subcommand("build", "build the complex described by a .deck file");
  build_cmd->add_option("--deck", deck_path, "input .deck file")->required();
  build_cmd->add_flag("--boundary", want_boundary, "emit the boundary instead of the handlebody");
  build_cmd->add_option("--out", out, "output .fct path (stdout when omitted)");

  auto* certify_cmd = app.add_subcommand("certify", "run the tightness certificate on a .fct file");
  certify_cmd->add_option("file", file_path, "input .fct file")->required();
  certify_cmd->add_option("--d", cert_d, "expected dimension");

  auto* family_cmd = app.add_subcommand("family", "the k=1 family on G(d,1;d+2,1)");
  family_cmd->add_option("--d", d, "manifold dimension")->required();
  family_cmd->add_flag("--list", fam_list, "print the (beta, alpha) decks");
  family_cmd->add_flag("--build", fam_build, "write each member as .deck/.fct files");
  family_cmd->add_option("--out", out, "directory for --build output");

  auto* betti_cmd = app.add_subcommand("betti", "Z/2 Betti numbers of a .fct complex");
  betti_cmd->add_option("file", file_path, "input .fct file")->required();

  auto* orient_cmd = app.add_subcommand("orient", "orientability of a .fct complex");
  orient_cmd->add_option("file", file_path, "input .fct file")->required();

  auto* tight_cmd = app.add_subcommand("tight-bruteforce",
                                       "decide Z/2-tightness by induced subcomplex enumeration");
  tight_cmd->add_option("file", file_path, "input .fct file")->required();
  tight_cmd->add_option("--max-n", max_n, "vertex cap for the subset enumeration");

  auto* orbits_cmd = app.add_subcommand("orbits", "facet orbit representatives under Z/n rotation");
  orbits_cmd->add_option("file", file_path, "input .fct file")->required();
  orbits_cmd->add_option("--n", orbits_n, "rotation modulus (default: vertex count)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (search_cmd->parsed()) return run_search(d, k, no_dedup, jobs, out);
    if (build_cmd->parsed()) return run_build(deck_path, want_boundary, out);
    if (certify_cmd->parsed()) return run_certify(file_path, cert_d);
    if (family_cmd->parsed()) return run_family(d, fam_list, fam_build, out);
    if (betti_cmd->parsed()) return run_betti(file_path);
    if (orient_cmd->parsed()) return run_orient(file_path);
    if (tight_cmd->parsed()) return run_tight_bruteforce(file_path, max_n);
    if (orbits_cmd->parsed()) return run_orbits(file_path, orbits_n);
  } catch (const tw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefuted;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return kExitRefuted;
  }
}
