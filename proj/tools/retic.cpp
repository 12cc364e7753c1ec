#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "retic/corpus.hpp"
#include "retic/io.hpp"
#include "retic/reticulation.hpp"
#include "retic/verify.hpp"

namespace fs = std::filesystem;
using namespace retic;

namespace {

FiniteAlgebra require_algebra(const Loaded& loaded, const std::string& path) {
  if (const auto* a = std::get_if<FiniteAlgebra>(&loaded)) return *a;
  throw error(errc::invalid_input, path + ": expected an algebra file");
}

Analysis analyze_loaded(Loaded loaded) {
  if (auto* a = std::get_if<FiniteAlgebra>(&loaded)) return analyze(*a);
  return analyze(std::move(std::get<CommutatorStructure>(loaded)));
}

void print_congruences(const FiniteAlgebra& a, const CongruenceLattice& lat) {
  std::cout << a.name << ": " << lat.size() << " congruences\n";
  for (int i = 0; i < lat.size(); ++i) {
    std::cout << "  c" << i << " = " << partition_to_string(lat.elems[i]);
    if (i == lat.bottom) std::cout << "  (identity)";
    if (i == lat.top) std::cout << "  (total)";
    std::cout << "\n";
  }
  std::cout << "  order matrix:\n";
  for (int i = 0; i < lat.size(); ++i) {
    std::cout << "    ";
    for (int j = 0; j < lat.size(); ++j) std::cout << (lat.leq[i][j] ? 1 : 0);
    std::cout << "\n";
  }
  ModularityReport mod = is_modular(lat);
  if (!mod.modular) {
    std::cout << "  warning: congruence lattice is not modular (pentagon at c"
              << mod.pentagon[0] << ",c" << mod.pentagon[1] << ",c" << mod.pentagon[2]
              << ",c" << mod.pentagon[3] << ",c" << mod.pentagon[4]
              << "); results are outside the supported theory\n";
  }
}

void print_comm_table(const CommutatorStructure& s) {
  std::cout << s.name << ": commutator table over " << s.size() << " elements\n";
  std::cout << "      ";
  for (int j = 0; j < s.size(); ++j) std::cout << s.labels[j] << " ";
  std::cout << "\n";
  for (int i = 0; i < s.size(); ++i) {
    std::cout << "  " << s.labels[i] << ": ";
    for (int j = 0; j < s.size(); ++j) std::cout << s.labels[s.comm(i, j)] << " ";
    std::cout << "\n";
  }
}

void print_spectrum(const Analysis& an) {
  const auto& s = an.s;
  auto list = [&s](const std::vector<int>& xs) {
    std::string out = "{";
    for (size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + s.labels[xs[i]];
    return out + "}";
  };
  std::cout << s.name << ":\n";
  std::cout << "  Spec = " << list(an.spec.primes) << "\n";
  std::cout << "  Max  = " << list(an.spec.maximals) << "\n";
  std::cout << "  Min  = " << list(an.spec.minimals) << "\n";
  std::cout << "  semiprime: " << (an.spec.semiprime ? "yes" : "no") << "\n";
  std::cout << "  radicals:\n";
  for (int x = 0; x < s.size(); ++x)
    std::cout << "    rho(" << s.labels[x] << ") = " << s.labels[an.spec.radical[x]] << "\n";
  if (!an.modularity.modular)
    std::cout << "  warning: carrier lattice is not modular; results are outside the "
                 "supported theory\n";
}

void print_topology(const Analysis& an) {
  const auto& t = an.zar.top;
  auto set_str = [&t](std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (int p = 0; p < t.npoints; ++p)
      if ((mask >> p) & 1) {
        if (!first) out += ",";
        first = false;
        out += t.point_labels[p];
      }
    return out + "}";
  };
  if (t.materialized) {
    std::cout << "  opens (" << t.opens.size() << "):\n";
    for (auto o : t.opens) std::cout << "    " << set_str(o) << "\n";
  } else {
    std::cout << "  opens: represented by basis (" << t.basis.size() << " sets)\n";
  }
  std::cout << "  basis:\n";
  for (auto b : t.basis) std::cout << "    " << set_str(b) << "\n";
  SpectralReport sr = spectral_space_check(t);
  std::cout << "  spectral-space report: t0=" << sr.t0 << " sober=" << sr.sober
            << " compact=" << sr.compact
            << " basis-intersection-closed=" << sr.basis_intersection_closed
            << " basis-generates=" << sr.basis_generates << " spectral=" << sr.spectral
            << "\n";
  if (!sr.witness.empty()) std::cout << "  witness: " << sr.witness << "\n";
}

void print_reticulation(const Analysis& an, StarVariant variant) {
  const auto& s = an.s;
  if (!an.retic_ok) {
    std::cout << s.name << ": reticulation unavailable -- " << an.retic_error << "\n";
    return;
  }
  const auto& l = an.l;
  std::cout << s.name << ": L has " << l.size() << " classes"
            << (s.strict ? "" : "  [formal model: lax structure]") << "\n";
  for (int c = 0; c < l.size(); ++c) {
    std::cout << "  q" << c << " = {";
    for (size_t i = 0; i < l.members[c].size(); ++i)
      std::cout << (i ? "," : "") << s.labels[l.members[c][i]];
    std::cout << "}";
    if (c == l.zero) std::cout << "  (zero)";
    if (c == l.one) std::cout << "  (one)";
    std::cout << "\n";
  }
  std::cout << "  order:\n";
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (x != y && l.le(x, y)) std::cout << "    q" << x << " <= q" << y << "\n";
  std::cout << "  lambda:\n";
  for (int x = 0; x < s.size(); ++x)
    if (l.lam[x] >= 0)
      std::cout << "    lambda(" << s.labels[x] << ") = q" << l.lam[x] << "\n";
  std::cout << "  star (" << (variant == StarVariant::K ? "K" : "C") << " variant):\n";
  for (int x = 0; x < s.size(); ++x) {
    StarResult st = star(an, x, variant);
    std::cout << "    star(" << s.labels[x] << ") = {";
    bool first = true;
    for (int c = 0; c < l.size(); ++c)
      if ((st.mask >> c) & 1) {
        std::cout << (first ? "" : ",") << "q" << c;
        first = false;
      }
    std::cout << "}" << (st.completed ? "  (completed downward)" : "") << "\n";
  }
}

std::vector<std::string> collect_paths(const std::string& path) {
  std::vector<std::string> files;
  if (fs::is_directory(path)) {
    for (const auto& e : fs::directory_iterator(path)) {
      std::string ext = e.path().extension().string();
      if (ext == ".alg" || ext == ".cms") files.push_back(e.path().string());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  if (files.empty()) throw error(errc::invalid_input, path + ": no .alg or .cms files");
  return files;
}

std::vector<std::vector<bool>> prime_order(const Analysis& an) {
  int np = static_cast<int>(an.spec.primes.size());
  std::vector<std::vector<bool>> leq(np, std::vector<bool>(np, false));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      leq[i][j] = an.s.le(an.spec.primes[i], an.spec.primes[j]);
  return leq;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra spectra and reticulation workbench"};
  app.require_subcommand(1);

  std::string path, out_path, dot_path, json_path;
  std::string suite = "all";
  std::string variant = "C";
  std::string what = "lattice";
  std::string families = "rings-zn,matrix-rings,lattice-chains,lattices-special,abstract";
  bool check_oracles = false, with_topology = false;
  int seed = 1, count = 100, max_size = 6;

  auto* con = app.add_subcommand("con", "list the congruences of an algebra");
  con->add_option("file", path)->required();

  auto* comm = app.add_subcommand("comm", "print the commutator table");
  comm->add_option("file", path)->required();
  comm->add_flag("--check-oracles", check_oracles, "compare against ring/lattice oracles");

  auto* spectrum_cmd = app.add_subcommand("spec", "primes, radicals and the Zariski topology");
  spectrum_cmd->add_option("file", path)->required();
  spectrum_cmd->add_flag("--topology", with_topology, "print the open-set family");
  spectrum_cmd->add_option("--dot", dot_path, "write the specialization order as dot");

  auto* retic_cmd = app.add_subcommand("retic", "the reticulation lattice and star maps");
  retic_cmd->add_option("file", path)->required();
  retic_cmd->add_option("--variant", variant, "star variant: K or C")
      ->check(CLI::IsMember({"K", "C"}));
  retic_cmd->add_option("--dot", dot_path, "write the Hasse diagram as dot");

  auto* verify_cmd = app.add_subcommand("verify", "run assertion suites");
  verify_cmd->add_option("path", path, "file or directory")->required();
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"core", "reticulation", "boolean", "annihilator", "minprime", "functor", "all"}));
  verify_cmd->add_option("--json", json_path, "write the machine-readable report");

  auto* corpus_cmd = app.add_subcommand("corpus", "write the built-in corpus");
  corpus_cmd->add_option("--out", out_path, "output directory")->required();
  corpus_cmd->add_option("--families", families, "comma-separated family list");
  corpus_cmd->add_option("--seed", seed);
  corpus_cmd->add_option("--count", count, "random structures to generate");
  corpus_cmd->add_option("--max-size", max_size, "carrier bound for random structures");

  auto* export_cmd = app.add_subcommand("export", "graph output for lattices and spectra");
  export_cmd->add_option("file", path)->required();
  export_cmd->add_option("--what", what)->check(CLI::IsMember({"lattice", "retic", "topology"}));
  export_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*con) {
      FiniteAlgebra a = require_algebra(load_file(path), path);
      print_congruences(a, con_lattice(a));
    } else if (*comm) {
      Loaded loaded = load_file(path);
      Analysis an = analyze_loaded(std::move(loaded));
      print_comm_table(an.s);
      if (check_oracles && an.alg) {
        const auto& alg = *an.alg;
        const auto& lat = *an.lat;
        if (alg.has_tag("unital-ring")) {
          bool ok = true;
          for (int i = 0; i < lat.size(); ++i)
            for (int j = 0; j <= i; ++j)
              if (!(ring_ideal_oracle(alg, lat.elems[i], lat.elems[j]) ==
                    lat.elems[an.s.comm_tab[i][j]]))
                ok = false;
          std::cout << "  ring-ideal oracle: " << (ok ? "agrees" : "DISAGREES") << "\n";
        }
        if (alg.has_tag("bounded-lattice")) {
          bool ok = an.s.comm_tab == an.s.meet_tab;
          std::cout << "  meet oracle: " << (ok ? "agrees" : "DISAGREES") << "\n";
        }
        if (!alg.has_tag("unital-ring") && !alg.has_tag("bounded-lattice"))
          std::cout << "  no oracle tags present\n";
      }
    } else if (*spectrum_cmd) {
      Analysis an = analyze_loaded(load_file(path));
      print_spectrum(an);
      if (with_topology) print_topology(an);
      if (!dot_path.empty()) {
        std::vector<std::string> labels;
        for (int p : an.spec.primes) labels.push_back(an.s.labels[p]);
        write_text_file(dot_path,
                        dot_specialization(labels, prime_order(an), an.s.name + "-spec"));
      }
    } else if (*retic_cmd) {
      Analysis an = analyze_loaded(load_file(path));
      print_reticulation(an, variant == "K" ? StarVariant::K : StarVariant::C);
      if (!dot_path.empty() && an.retic_ok) {
        std::vector<std::string> labels;
        for (int c = 0; c < an.l.size(); ++c) labels.push_back("q" + std::to_string(c));
        write_text_file(dot_path, dot_lattice(labels, an.l.leq, an.s.name + "-retic"));
      }
    } else if (*verify_cmd) {
      std::vector<Instance> instances;
      for (const auto& f : collect_paths(path)) {
        Loaded loaded = load_file(f);
        if (auto* a = std::get_if<FiniteAlgebra>(&loaded))
          instances.push_back(make_instance(*a));
        else
          instances.push_back(make_instance(std::get<CommutatorStructure>(loaded)));
      }
      VerifyReport rep = run_suite(instances, suite);
      std::cout << rep.to_text();
      if (!json_path.empty()) write_text_file(json_path, rep.to_json());
      return rep.violations() ? 2 : 0;
    } else if (*corpus_cmd) {
      fs::create_directories(out_path);
      auto wants = [&families](const std::string& f) {
        return families.find(f) != std::string::npos;
      };
      std::vector<std::string> manifest;
      Corpus c = shipped_corpus();
      for (const auto& a : c.algebras) {
        bool ring = a.has_tag("unital-ring");
        bool zn = ring && a.name[0] == 'z';
        bool chain = a.name[0] == 'c' && a.has_tag("bounded-lattice");
        bool special = a.name == "m3" || a.name == "n5";
        bool matrix = ring && !zn;
        if ((zn && wants("rings-zn")) || (matrix && wants("matrix-rings")) ||
            (chain && wants("lattice-chains")) || (special && wants("lattices-special"))) {
          std::string file = out_path + "/" + a.name + ".alg";
          write_text_file(file, serialize_algebra(a));
          manifest.push_back(a.name + ".alg");
        }
      }
      if (wants("abstract")) {
        for (const auto& s : c.structures) {
          std::string file = out_path + "/" + s.name + ".cms";
          write_text_file(file, serialize_structure(s));
          manifest.push_back(s.name + ".cms");
        }
      }
      if (wants("random-lax-structures")) {
        for (const auto& s : random_lax_structures(count, max_size,
                                                   static_cast<std::uint32_t>(seed))) {
          std::string file = out_path + "/" + s.name + ".cms";
          write_text_file(file, serialize_structure(s));
          manifest.push_back(s.name + ".cms");
        }
      }
      std::string m = "[\n";
      for (size_t i = 0; i < manifest.size(); ++i)
        m += "  \"" + manifest[i] + "\"" + (i + 1 < manifest.size() ? "," : "") + "\n";
      m += "]\n";
      write_text_file(out_path + "/manifest.json", m);
      std::cout << "wrote " << manifest.size() << " corpus files to " << out_path << "\n";
    } else if (*export_cmd) {
      Analysis an = analyze_loaded(load_file(path));
      std::string text;
      if (what == "lattice") {
        text = dot_lattice(an.s.labels, an.s.leq, an.s.name);
      } else if (what == "retic") {
        if (!an.retic_ok) throw error(errc::invalid_input, "reticulation unavailable");
        std::vector<std::string> labels;
        for (int c = 0; c < an.l.size(); ++c) labels.push_back("q" + std::to_string(c));
        text = dot_lattice(labels, an.l.leq, an.s.name + "-retic");
      } else {
        std::vector<std::string> labels;
        for (int p : an.spec.primes) labels.push_back(an.s.labels[p]);
        text = dot_specialization(labels, prime_order(an), an.s.name + "-spec");
      }
      if (out_path.empty())
        std::cout << text;
      else
        write_text_file(out_path, text);
    }
  } catch (const error& e) {
    std::cerr << errc_name(e.kind()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
