// qpkit — command-line front end for the exact cluster-algebra and
// quiver-with-potential toolkit.
//
//   qpkit seed walk --matrix FILE --word 2,1,2 [--format json|tsv]
//   qpkit seed table-a2 [--format json|tsv]
//   qpkit qp mutate --quiver FILE --potential FILE --at K --truncation N
//   qpkit rep build --matrix FILE --potential FILE --word W --ell L --seed U64
//   qpkit verify all [--config FILE] [--format json|tsv] [--out FILE]
//
// Exit codes: 0 = success / all checks green, 1 = a verification check
// failed, 2 = usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpkit/cluster_rep.hpp"
#include "qpkit/hom.hpp"
#include "qpkit/io.hpp"
#include "qpkit/qp_mutate.hpp"
#include "qpkit/report.hpp"
#include "qpkit/seed.hpp"
#include "qpkit/tree_word.hpp"
#include "qpkit/verify.hpp"

namespace {

using namespace qpkit;

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

nlohmann::ordered_json matrix_rows(const IntMat& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  QPKIT_REQUIRE(f.good(), "cannot open output file: " + out_path);
  f << text;
}

int run_seed_walk(const std::string& matrix_file, const std::string& word_text,
                  const std::string& format) {
  const IntMat B = load_matrix(matrix_file);
  const TreeWord word = parse_tree_word(word_text);
  word.validate(B.rows);
  const auto states = invariants_along(B, word);

  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = "qpkit-walk-v1";
    doc["n"] = B.rows;
    doc["word"] = to_string(word);
    auto arr = nlohmann::ordered_json::array();
    for (size_t s = 0; s < states.size(); ++s) {
      const auto& ext = states[s].first;
      const auto& inv = states[s].second;
      nlohmann::ordered_json st;
      st["step"] = s;
      st["matrix"] = matrix_rows(ext.entries);
      auto g = nlohmann::ordered_json::array();
      auto f = nlohmann::ordered_json::array();
      auto h = nlohmann::ordered_json::array();
      for (int ell = 0; ell < B.rows; ++ell) {
        g.push_back(inv.g[ell]);
        f.push_back(to_string(inv.f[ell]));
        h.push_back(inv.h[ell]);
      }
      st["g"] = std::move(g);
      st["f"] = std::move(f);
      st["h"] = std::move(h);
      arr.push_back(std::move(st));
    }
    doc["states"] = std::move(arr);
    out << doc.dump(2) << '\n';
  } else {
    out << "schema\tqpkit-walk-v1\n";
    out << "word\t" << to_string(word) << '\n';
    out << "step\tslot\tg\tf\th\n";
    for (size_t s = 0; s < states.size(); ++s) {
      const auto& inv = states[s].second;
      for (int ell = 0; ell < B.rows; ++ell) {
        out << s << '\t' << (ell + 1) << '\t' << join_ints(inv.g[ell]) << '\t'
            << to_string(inv.f[ell]) << '\t' << join_ints(inv.h[ell]) << '\n';
      }
    }
  }
  std::cout << out.str();
  return 0;
}

int run_table_a2(const std::string& format) {
  IntMat b(2, 2);
  b.at(0, 1) = 1;
  b.at(1, 0) = -1;
  const auto states = invariants_along(b, TreeWord{{1, 0, 1, 0, 1}});

  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = "qpkit-a2-v1";
    auto rows = nlohmann::ordered_json::array();
    for (size_t t = 0; t < states.size(); ++t) {
      const auto& ext = states[t].first;
      const auto& inv = states[t].second;
      nlohmann::ordered_json row;
      row["t"] = "t" + std::to_string(t);
      row["matrix"] = matrix_rows(ext.entries);
      row["g"] = nlohmann::ordered_json::array({inv.g[0], inv.g[1]});
      row["f"] = nlohmann::ordered_json::array(
          {to_string(inv.f[0]), to_string(inv.f[1])});
      row["h"] = nlohmann::ordered_json::array({inv.h[0], inv.h[1]});
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    const VerificationReport check = reproduce_a2();
    doc["verified"] = check.all_green();
    out << doc.dump(2) << '\n';
    std::cout << out.str();
    if (!check.all_green()) {
      for (const CheckRecord& c : check.checks)
        if (!c.pass)
          std::cerr << "failed: " << c.name << " @ " << c.instance << ": "
                    << c.witness << '\n';
      return 1;
    }
    return 0;
  }

  out << "schema\tqpkit-a2-v1\n";
  out << "t\tg1\tf1\th1\tg2\tf2\th2\n";
  for (size_t t = 0; t < states.size(); ++t) {
    const auto& inv = states[t].second;
    out << 't' << t << '\t' << join_ints(inv.g[0]) << '\t'
        << to_string(inv.f[0]) << '\t' << join_ints(inv.h[0]) << '\t'
        << join_ints(inv.g[1]) << '\t' << to_string(inv.f[1]) << '\t'
        << join_ints(inv.h[1]) << '\n';
  }
  std::cout << out.str();
  const VerificationReport check = reproduce_a2();
  if (!check.all_green()) {
    for (const CheckRecord& c : check.checks)
      if (!c.pass)
        std::cerr << "failed: " << c.name << " @ " << c.instance << ": "
                  << c.witness << '\n';
    return 1;
  }
  return 0;
}

int run_qp_mutate(const std::string& quiver_file,
                  const std::string& potential_file, int at_vertex,
                  int truncation, const std::string& out_quiver,
                  const std::string& out_potential) {
  const Quiver Q = load_quiver(quiver_file);
  const PathVector S = load_potential(potential_file, Q);
  const QP qp = make_qp(Q, S, truncation);
  QPKIT_REQUIRE(1 <= at_vertex && at_vertex <= Q.vertex_count(),
                "qp mutate: --at must name a vertex between 1 and " +
                    std::to_string(Q.vertex_count()));
  const QPMutationResult res = mutate_qp(qp, at_vertex - 1);

  std::ostringstream qtext, ptext;
  write_quiver(qtext, res.reduced.quiver);
  write_potential(ptext, res.reduced.quiver, res.reduced.potential);

  std::cerr << "mutated at vertex " << at_vertex << "; trivial pairs removed: "
            << res.trivial_pairs << '\n';
  if (out_quiver.empty() && out_potential.empty()) {
    std::cout << "quiver\n" << qtext.str() << "\npotential\n" << ptext.str();
    return 0;
  }
  if (!out_quiver.empty()) write_output(out_quiver, qtext.str());
  if (!out_potential.empty()) write_output(out_potential, ptext.str());
  return 0;
}

int run_rep_build(const std::string& matrix_file,
                  const std::string& potential_file,
                  const std::string& word_text, int ell, std::uint64_t seed,
                  int truncation, const std::string& out_rep,
                  const std::string& out_quiver) {
  const IntMat B = load_matrix(matrix_file);
  const Quiver Q = quiver_from_matrix(B);
  const PathVector S = load_potential(potential_file, Q);
  const QP qp = make_qp(Q, S, truncation);
  const TreeWord word = parse_tree_word(word_text);
  word.validate(Q.vertex_count());
  QPKIT_REQUIRE(1 <= ell && ell <= Q.vertex_count(),
                "rep build: --ell must name a vertex between 1 and " +
                    std::to_string(Q.vertex_count()));
  Rng rng(seed);
  const ClusterRepResult res = build_cluster_rep(qp, word, ell - 1, &rng);

  std::ostringstream rep_text, quiver_text;
  write_rep(rep_text, res.final_qp.quiver, res.rep);
  write_quiver(quiver_text, res.final_qp.quiver);

  const IntVec g = rep_g_vector(res.final_qp, res.rep);
  const IntVec h = rep_h_vector(res.final_qp, res.rep);
  std::cerr << "dims " << join_ints(res.rep.dims) << "; dec "
            << join_ints(res.rep.dec_dims) << "; g " << join_ints(g) << "; h "
            << join_ints(h) << "; self-E " << e_invariant(res.final_qp, res.rep)
            << '\n';
  std::cerr << "arrow ids refer to the word-end quiver ("
            << res.final_qp.quiver.arrow_count() << " arrows)\n";

  write_output(out_rep, rep_text.str());
  if (!out_quiver.empty()) write_output(out_quiver, quiver_text.str());
  return 0;
}

int run_verify_all(const std::string& config_file, const std::string& format,
                   const std::string& out_path) {
  VerifyConfig cfg;
  if (!config_file.empty()) cfg = load_config_json(slurp_file(config_file));
  validate_config(cfg);

  std::vector<VerificationReport> reports;
  reports.push_back(reproduce_a2());
  reports.push_back(verify_small_type_a(cfg.truncation, cfg.word_len_max));
  reports.push_back(verify_theorems(cfg));

  bool green = true;
  for (const VerificationReport& r : reports) {
    std::cerr << "campaign " << r.campaign << ": passed " << r.passed()
              << ", failed " << r.failed() << '\n';
    green = green && r.all_green();
  }

  std::string text;
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports)
      arr.push_back(nlohmann::ordered_json::parse(emit_json(r)));
    text = arr.dump(2) + "\n";
  } else {
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i) text += "\n";
      text += emit_tsv(reports[i]);
    }
  }
  write_output(out_path, text);
  return green ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cluster-algebra / quiver-with-potential toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  std::string walk_matrix, walk_word, walk_format = "json";
  std::string a2_format = "json";
  std::string qpm_quiver, qpm_potential, qpm_out_quiver, qpm_out_potential;
  int qpm_at = 0, qpm_trunc = 10;
  std::string rb_matrix, rb_potential, rb_word, rb_out, rb_out_quiver;
  int rb_ell = 0, rb_trunc = 12;
  std::uint64_t rb_seed = 1;
  std::string va_config, va_format = "json", va_out;

  const auto format_check = CLI::IsMember({"json", "tsv"});

  CLI::App* seed = app.add_subcommand("seed", "recurrences along tree words");
  seed->require_subcommand(1);
  CLI::App* walk = seed->add_subcommand(
      "walk", "g-vectors, F-polynomials, and h-vectors along a word");
  walk->add_option("--matrix", walk_matrix, "skew-symmetric matrix file")
      ->required();
  walk->add_option("--word", walk_word, "comma-separated 1-based directions")
      ->required();
  walk->add_option("--format", walk_format, "json or tsv")->check(format_check);
  walk->callback([&] { rc = run_seed_walk(walk_matrix, walk_word, walk_format); });

  CLI::App* table = seed->add_subcommand(
      "table-a2", "the rank-2 reference walk with its periodicity checks");
  table->add_option("--format", a2_format, "json or tsv")->check(format_check);
  table->callback([&] { rc = run_table_a2(a2_format); });

  CLI::App* qp = app.add_subcommand("qp", "quivers with potential");
  qp->require_subcommand(1);
  CLI::App* qpm = qp->add_subcommand(
      "mutate", "mutate a quiver with potential and drop its trivial part");
  qpm->add_option("--quiver", qpm_quiver, "quiver file")->required();
  qpm->add_option("--potential", qpm_potential, "potential file")->required();
  qpm->add_option("--at", qpm_at, "1-based vertex to mutate at")->required();
  qpm->add_option("--truncation", qpm_trunc, "path-length cutoff (default 10)");
  qpm->add_option("--out-quiver", qpm_out_quiver, "write mutated quiver here");
  qpm->add_option("--out-potential", qpm_out_potential,
                  "write mutated potential here");
  qpm->callback([&] {
    rc = run_qp_mutate(qpm_quiver, qpm_potential, qpm_at, qpm_trunc,
                       qpm_out_quiver, qpm_out_potential);
  });

  CLI::App* repc = app.add_subcommand("rep", "decorated representations");
  repc->require_subcommand(1);
  CLI::App* build = repc->add_subcommand(
      "build",
      "build the representation attached to a word and a cluster slot");
  build->add_option("--matrix", rb_matrix, "skew-symmetric matrix file")
      ->required();
  build->add_option("--potential", rb_potential,
                    "potential file (may be empty)")
      ->required();
  build->add_option("--word", rb_word, "comma-separated 1-based directions")
      ->required();
  build->add_option("--ell", rb_ell, "1-based slot to follow")->required();
  build->add_option("--seed", rb_seed, "random seed for splitting choices");
  build->add_option("--truncation", rb_trunc, "path-length cutoff (default 12)");
  build->add_option("--out", rb_out, "write the representation here");
  build->add_option("--out-quiver", rb_out_quiver, "write the word-end quiver");
  build->callback([&] {
    rc = run_rep_build(rb_matrix, rb_potential, rb_word, rb_ell, rb_seed,
                       rb_trunc, rb_out, rb_out_quiver);
  });

  CLI::App* ver = app.add_subcommand("verify", "verification campaigns");
  ver->require_subcommand(1);
  CLI::App* all = ver->add_subcommand("all", "run every campaign and report");
  all->add_option("--config", va_config, "campaign configuration (json)");
  all->add_option("--format", va_format, "json or tsv")->check(format_check);
  all->add_option("--out", va_out, "write the report here instead of stdout");
  all->callback([&] { rc = run_verify_all(va_config, va_format, va_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qpkit::error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qpkit: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
