#include "synq/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>
#include <string>

#include "synq/classical.hpp"
#include "synq/game.hpp"
#include "synq/io.hpp"
#include "synq/ncalg.hpp"
#include "synq/presentation.hpp"
#include "synq/repcheck.hpp"

namespace synq {

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUnresolved = 2;
constexpr int kExitUsage = 64;

std::string fmt_e(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

Variant variant_of(const std::string& name) {
  return name == "bistochastic" ? Variant::bistochastic : Variant::game;
}

int exit_of(TheoremReport::Status s) {
  switch (s) {
    case TheoremReport::Status::verified:
      return kExitVerified;
    case TheoremReport::Status::failed:
      return kExitFailed;
    case TheoremReport::Status::unresolved:
      return kExitUnresolved;
  }
  return kExitUsage;
}

void print_report(std::ostream& out, const TheoremReport& rep) {
  out << rep.claim << ": " << to_string(rep.status);
  if (rep.status == TheoremReport::Status::verified) {
    out << " (";
    for (size_t i = 0; i < rep.family_counts.size(); ++i) {
      if (i) out << ", ";
      out << rep.family_counts[i].first << " " << rep.family_counts[i].second;
    }
    out << ")";
  } else if (rep.witness) {
    out << " (" << *rep.witness << ")";
    if (rep.unresolved_count > 0)
      out << " [" << rep.unresolved_count << " unresolved]";
  }
  out << "\n";
}

void print_verification(std::ostream& out, const VerificationReport& rep,
                        int dim) {
  out << "dim " << dim << "\n";
  out << "self-adjoint  " << fmt_e(rep.self_adjoint) << "\n";
  out << "idempotent    " << fmt_e(rep.idempotent) << "\n";
  out << "row-sum       " << fmt_e(rep.row_sum) << "\n";
  if (rep.column_sum) out << "column-sum    " << fmt_e(*rep.column_sum) << "\n";
  out << "orthogonality " << fmt_e(rep.orthogonality) << "\n";
  out << "result: " << (rep.pass ? "pass" : "fail") << " (tol "
      << fmt_e(rep.tol) << ")\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"synq: synchronous games, their algebras, and matrix models"};
  app.require_subcommand(1);
  int code = kExitVerified;

  std::string graph_path, game_path, model_path, model2_path, out_path;
  std::string variant_name = "game";
  bool invertible = false, table = false;
  int degree = 4;
  double tol = 1e-9;
  int lemma_n = 3, lemma_dim = 8, lemma_trials = 1;
  unsigned long long lemma_seed = 1;
  double lemma_tol = 1e-10;

  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", variant_name, "relation family")
        ->check(CLI::IsMember({"game", "bistochastic"}));
  };

  CLI::App* graph_game =
      app.add_subcommand("graph-game", "materialize a graph endomorphism game");
  graph_game->add_option("graph", graph_path)->required();
  graph_game->add_option("-o,--output", out_path)->required();
  graph_game->callback([&] {
    GameSpec spec = make_graph_game(parse_graph(read_file(graph_path)));
    write_file(out_path, render_game(spec));
    out << "inputs " << spec.inputs << ", forbidden tuples "
        << spec.forbidden.size() << "\n";
  });

  CLI::App* check_star_cmd =
      app.add_subcommand("check-star", "decide condition (*)");
  check_star_cmd->add_option("game", game_path)->required();
  check_star_cmd->callback([&] {
    auto w = check_star(parse_game(read_file(game_path)));
    if (!w) {
      out << "STAR: holds\n";
    } else {
      out << "STAR: fails\nwitness: " << to_string(*w) << "\n";
      code = kExitFailed;
    }
  });

  CLI::App* counit_cmd =
      app.add_subcommand("counit", "decide the counit condition and identities");
  counit_cmd->add_option("game", game_path)->required();
  counit_cmd->callback([&] {
    GameSpec spec = parse_game(read_file(game_path));
    auto w = check_counit_condition(spec);
    if (w) {
      out << "COUNIT: fails\nwitness: (" << w->first << "," << w->second
          << ")\n";
      code = kExitFailed;
      return;
    }
    TheoremReport rep = verify_counit_identity(spec, Variant::game);
    out << "COUNIT: holds\n";
    print_report(out, rep);
    code = exit_of(rep.status);
  });

  CLI::App* present_cmd =
      app.add_subcommand("present", "emit the presentation of the algebra");
  present_cmd->add_option("game", game_path)->required();
  add_variant(present_cmd);
  present_cmd->add_option("-o,--output", out_path);
  present_cmd->callback([&] {
    GameSpec spec = parse_game(read_file(game_path));
    std::string text =
        render_presentation(present(spec, variant_of(variant_name)));
    if (out_path.empty())
      out << text;
    else
      write_file(out_path, text);
  });

  CLI::App* verify_delta_cmd = app.add_subcommand(
      "verify-delta", "verify the comultiplication symbolically");
  verify_delta_cmd->add_option("game", game_path)->required();
  add_variant(verify_delta_cmd);
  verify_delta_cmd->callback([&] {
    GameSpec spec = parse_game(read_file(game_path));
    Variant variant = variant_of(variant_name);
    TheoremReport rep = verify_delta_well_defined(spec, variant);
    print_report(out, rep);
    code = exit_of(rep.status);
    if (rep.verified()) {
      TheoremReport co = verify_coassociativity(spec, variant);
      print_report(out, co);
      if (code == kExitVerified) code = exit_of(co.status);
    }
  });

  CLI::App* verify_group_cmd = app.add_subcommand(
      "verify-group", "verify the compact-quantum-group identities");
  verify_group_cmd->add_option("game", game_path)->required();
  verify_group_cmd->callback([&] {
    TheoremReport rep =
        verify_group_identities(parse_game(read_file(game_path)));
    print_report(out, rep);
    code = exit_of(rep.status);
  });

  CLI::App* classical_cmd =
      app.add_subcommand("classical", "enumerate classical points");
  classical_cmd->add_option("game", game_path)->required();
  classical_cmd->add_flag("--invertible", invertible);
  classical_cmd->add_flag("--table", table);
  classical_cmd->callback([&] {
    GameSpec spec = parse_game(read_file(game_path));
    auto points = enumerate_classical_points(spec, invertible);
    out << points.size() << " points\n";
    out << render_points(points);
    if (table) {
      CayleyReport rep = cayley_table(spec, points);
      out << render_cayley_csv(rep);
      out << "closure: " << (rep.closed ? "closed" : "not closed") << "\n";
      out << "group: " << (rep.is_group ? "yes" : "no");
      if (rep.identity_index >= 0)
        out << " (identity index " << rep.identity_index << ")";
      out << "\n";
    }
  });

  CLI::App* basis_cmd = app.add_subcommand(
      "basis-count", "free-product basis counts per degree (easiest games)");
  basis_cmd->add_option("game", game_path)->required();
  basis_cmd->add_option("--degree", degree)->required();
  basis_cmd->callback([&] {
    auto counts = reduced_word_counts(parse_game(read_file(game_path)), degree);
    BigInt total = 0;
    for (size_t k = 0; k < counts.size(); ++k) {
      out << "degree " << k << ": " << counts[k] << "\n";
      total += counts[k];
    }
    out << "cumulative: " << total << "\n";
  });

  CLI::App* verify_rep_cmd =
      app.add_subcommand("verify-rep", "check a matrix model of a game");
  verify_rep_cmd->add_option("game", game_path)->required();
  verify_rep_cmd->add_option("model", model_path)->required();
  add_variant(verify_rep_cmd);
  verify_rep_cmd->add_option("--tol", tol);
  verify_rep_cmd->callback([&] {
    GameSpec spec = parse_game(read_file(game_path));
    MatrixModel m = parse_model(read_file(model_path));
    VerificationReport rep =
        verify_model(spec, m, variant_of(variant_name), tol);
    print_verification(out, rep, m.dim);
    code = rep.pass ? kExitVerified : kExitFailed;
  });

  CLI::App* compose_cmd = app.add_subcommand(
      "compose-rep", "Kronecker composition of two matrix models");
  compose_cmd->add_option("game", game_path)->required();
  compose_cmd->add_option("model1", model_path)->required();
  compose_cmd->add_option("model2", model2_path)->required();
  compose_cmd->add_option("-o,--output", out_path)->required();
  compose_cmd->callback([&] {
    GameSpec spec = parse_game(read_file(game_path));
    MatrixModel m1 = parse_model(read_file(model_path));
    MatrixModel m2 = parse_model(read_file(model2_path));
    if (m1.inputs != spec.inputs || m1.outputs != spec.outputs ||
        m2.inputs != spec.inputs || m2.outputs != spec.outputs)
      throw Error("compose-rep: model shape does not match the game");
    MatrixModel m = compose_models(m1, m2);
    write_file(out_path, render_model(m));
    out << "dim " << m.dim << "\n";
  });

  CLI::App* lemma_cmd = app.add_subcommand(
      "lemma-test", "random partitions of unity are pairwise orthogonal");
  lemma_cmd->add_option("--n", lemma_n, "number of parts")->required();
  lemma_cmd->add_option("--dim", lemma_dim)->required();
  lemma_cmd->add_option("--seed", lemma_seed)->required();
  lemma_cmd->add_option("--trials", lemma_trials)->required();
  lemma_cmd->add_option("--tol", lemma_tol);
  lemma_cmd->callback([&] {
    double worst_orth = 0, worst_sum = 0;
    for (int t = 0; t < lemma_trials; ++t) {
      auto parts =
          random_projection_partition(lemma_n, lemma_dim, lemma_seed + t);
      CMatrix sum = CMatrix::Zero(lemma_dim, lemma_dim);
      for (const CMatrix& p : parts) sum += p;
      double orth = lemma_orthogonality_residual(parts);
      double sres =
          spectral_norm(sum - CMatrix::Identity(lemma_dim, lemma_dim));
      out << "trial " << t << ": orthogonality " << fmt_e(orth) << " sum "
          << fmt_e(sres) << "\n";
      worst_orth = std::max(worst_orth, orth);
      worst_sum = std::max(worst_sum, sres);
    }
    out << "max orthogonality residual: " << fmt_e(worst_orth) << "\n";
    out << "max sum residual: " << fmt_e(worst_sum) << "\n";
    bool pass = worst_orth <= lemma_tol && worst_sum <= lemma_tol;
    out << "result: " << (pass ? "pass" : "fail") << " (tol "
        << fmt_e(lemma_tol) << ")\n";
    code = pass ? kExitVerified : kExitFailed;
  });

  std::vector<const char*> argv;
  argv.push_back("synq");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitVerified;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace synq
