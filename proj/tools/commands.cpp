/*
 * Copyright (c) 2026, The surfkernel Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "surfkernel/error.hpp"
#include "surfkernel/homology.hpp"
#include "surfkernel/schreier.hpp"

namespace surfkernel::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string job;
  std::string format = "text";
  std::string transversal;
  std::optional<std::size_t> cap;
  std::string program;
  std::string ops;
};

/// Failure that maps to a specific exit code with a message.
struct Exit {
  int code;
  std::string message;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return kExitParse;
    case ErrorCode::kSimplificationIncomplete:
      return kExitSimplification;
    case ErrorCode::kNotInKernel:
    case ErrorCode::kOrdering:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

class Runner {
 public:
  Runner(Options opts, std::ostream& out)
      : opts_(std::move(opts)), out_(out), job_(load_job(opts_.job)) {
    if (!opts_.transversal.empty()) {
      std::ifstream in(opts_.transversal);
      if (!in) {
        throw Error(ErrorCode::kParse,
                    "cannot read transversal file '" + opts_.transversal + "'");
      }
      std::ostringstream text;
      text << in.rdbuf();
      job_.transversal = parse_transversal(text.str(), job_.group);
    }
  }

  bool machine() const { return opts_.format == "machine"; }

  int validate() {
    ValidationReport const report = check();
    if (machine()) {
      ordered_json j;
      j["valid"] = report.valid();
      j["long_relation_ok"] = report.long_relation_ok;
      j["period_orders_ok"] = report.period_orders_ok;
      j["surjective"] = report.surjective;
      out_ << j.dump() << '\n';
    } else {
      header("Surface-kernel map validation");
      auto const mark = [](bool ok) { return ok ? "ok" : "FAILED"; };
      out_ << "long relation: " << mark(report.long_relation_ok) << '\n';
      for (std::size_t j = 0; j < report.period_orders_ok.size(); ++j) {
        out_ << "order of xi" << j + 1 << " = "
             << job_.group.element_order(job_.phi.xi[j]) << ", m" << j + 1
             << " = " << job_.signature.periods()[j] << ": "
             << mark(report.period_orders_ok[j]) << '\n';
      }
      out_ << "surjective: " << mark(report.surjective) << '\n';
      out_ << (report.valid() ? "valid" : "invalid") << '\n';
    }
    if (!report.valid()) {
      throw Exit{kExitValidation, join(report.failures())};
    }
    return kExitOk;
  }

  int genus() {
    std::uint64_t const g = kernel_genus(job_.signature, job_.group.order());
    if (machine()) {
      out_ << ordered_json{{"genus", g}}.dump() << '\n';
    } else {
      header("Riemann-Hurwitz genus of the kernel surface");
      out_ << "g = " << g << '\n';
    }
    return kExitOk;
  }

  int present() {
    require_valid();
    SchreierTransversal const t = transversal();
    KernelPresentation const raw =
        raw_presentation(job_.signature, job_.group, job_.phi, t);
    PresentationCounts const counts = raw_counts(raw);
    PresentationCounts const expected = count_check(job_.signature, job_.group);
    if (machine()) {
      out_ << dump(raw, job_.group);
    } else {
      header("Reidemeister-Schreier presentation with Schreier generators");
      print_transversal(t);
      out_ << "generators: " << counts.generators << " (expected "
           << expected.generators << ")\n";
      out_ << "relations after trivial-generator cancellation: "
           << counts.relations << " (expected " << expected.relations << ")\n";
      out_ << dump(raw, job_.group);
    }
    if (counts != expected) {
      throw Exit{kExitInternal, "raw presentation counts disagree with the "
                                "generator/relation count formula"};
    }
    return kExitOk;
  }

  int simplify_cmd() {
    require_valid();
    SchreierTransversal const t = transversal();
    KernelPresentation const p = simplified(t);
    bool const linked = p.relations.empty() ? true : linkedness_check(p);
    if (machine()) {
      out_ << dump(p, job_.group);
    } else {
      header("Tietze-simplified presentation");
      out_ << p.generators.size() << " generators, " << p.relations.size()
           << (p.relations.size() == 1 ? " relation" : " relations")
           << " (genus " << p.genus_expected << ")\n";
      out_ << "linked: " << (linked ? "yes" : "no") << '\n';
      out_ << dump(p, job_.group);
    }
    if (!linked) {
      throw Exit{kExitInternal, "surface relation is not linked"};
    }
    return kExitOk;
  }

  int homology() {
    require_valid();
    SchreierTransversal const t = transversal();
    KernelPresentation const p = simplified(t);
    HomologyAction const h = homology_matrices(p, t, job_.group, job_.phi);
    bool const rep_ok = check_representation(h, job_.group);
    std::optional<BlockReport> block;
    if (job_.signature.genus() >= 1) {
      block = block_structure_check(h, job_.signature, job_.group, job_.phi);
    }
    if (machine()) {
      ordered_json j;
      j["basis"] = labels(h.basis);
      ordered_json mats = ordered_json::object();
      for (GroupElement const g : job_.group.elements()) {
        mats[job_.group.name(g)] = rows(h.matrix(g));
      }
      j["matrices"] = std::move(mats);
      j["representation"] = rep_ok;
      if (block) {
        j["block_structure"] = {{"ok", block->ok}, {"reason", block->reason}};
      } else {
        j["block_structure"] = nullptr;
      }
      out_ << j.dump() << '\n';
    } else {
      header("Action of G on first homology (column k = image of basis element k)");
      out_ << "basis (rank " << h.basis.size() << "):\n";
      auto const names = labels(h.basis);
      for (std::size_t k = 0; k < names.size(); ++k) {
        out_ << "  " << std::setw(3) << k << "  " << names[k] << '\n';
      }
      for (GroupElement const g : job_.group.elements()) {
        out_ << "element " << job_.group.name(g) << ":\n";
        IntMatrix const& m = h.matrix(g);
        for (std::size_t i = 0; i < m.size(); ++i) {
          out_ << " ";
          for (std::size_t k = 0; k < m.size(); ++k) {
            out_ << ' ' << std::setw(2) << m.at(i, k);
          }
          out_ << '\n';
        }
      }
      out_ << "representation: " << (rep_ok ? "ok" : "FAILED") << '\n';
      if (block) {
        out_ << "block structure: "
             << (block->ok ? std::string("ok") : "FAILED (" + block->reason + ")")
             << '\n';
      }
    }
    if (!rep_ok) {
      throw Exit{kExitInternal, "homology matrices do not form a representation"};
    }
    return kExitOk;
  }

  int adapted() {
    require_valid();
    SchreierTransversal const t = transversal();
    KernelPresentation const p = simplified(t);
    HomologyAction const h = homology_matrices(p, t, job_.group, job_.phi);
    AdaptedReport const r = adapted_check(h, job_.group);
    auto const names = labels(h.basis);
    if (machine()) {
      ordered_json j;
      j["adapted"] = r.adapted;
      ordered_json cases = ordered_json::array();
      for (std::size_t k = 0; k < names.size(); ++k) {
        cases.push_back({{"basis", names[k]}, {"case", to_string(r.cases[k])}});
      }
      j["cases"] = std::move(cases);
      j["witness"] = r.witness ? ordered_json(names[*r.witness]) : ordered_json(nullptr);
      j["reason"] = r.reason;
      out_ << j.dump() << '\n';
    } else {
      header("Adapted homology basis check");
      for (std::size_t k = 0; k < names.size(); ++k) {
        out_ << "  " << names[k] << ": " << to_string(r.cases[k]) << '\n';
      }
      out_ << (r.adapted ? "adapted" : "not adapted") << '\n';
      if (r.witness) {
        out_ << "witness: " << names[*r.witness] << " (" << r.reason << ")\n";
      }
    }
    return kExitOk;
  }

  int harvey() {
    require_valid();
    std::vector<HarveyOp> program =
        opts_.program.empty() ? job_.harvey : parse_program(opts_.program);
    GeneratingVector phi = job_.phi;
    ordered_json steps = ordered_json::array();
    if (!machine()) {
      header("Harvey operations on the generating vector");
      out_ << "start: " << to_string(phi, job_.group) << '\n';
    }
    for (HarveyOp const op : program) {
      if (!is_applicable(op, job_.signature)) {
        throw Exit{kExitValidation,
                   to_string(op) + " does not apply to signature " +
                       to_string(job_.signature)};
      }
      OpResult res = apply_op(op, phi, job_.group);
      if (machine()) {
        steps.push_back({{"op", to_string(op)},
                         {"applied", res.applied},
                         {"vector", to_string(res.vector, job_.group)},
                         {"reason", res.reason.value_or("")}});
      } else {
        out_ << to_string(op) << ": "
             << (res.applied ? to_string(res.vector, job_.group)
                             : "skipped, " + *res.reason)
             << '\n';
      }
      phi = std::move(res.vector);
    }
    bool const valid =
        surfkernel::validate(job_.signature, job_.group, phi).valid();
    if (machine()) {
      out_ << ordered_json{{"steps", steps},
                           {"result", to_string(phi, job_.group)},
                           {"valid", valid}}
                  .dump()
           << '\n';
    } else {
      out_ << "result: " << to_string(phi, job_.group) << '\n';
      out_ << "valid: " << (valid ? "yes" : "no") << '\n';
    }
    if (!valid) {
      throw Exit{kExitInternal, "Harvey program produced an invalid vector"};
    }
    return kExitOk;
  }

  int orbit() {
    require_valid();
    std::vector<HarveyOp> ops;
    if (!opts_.ops.empty()) {
      ops = parse_program(opts_.ops);
    } else if (job_.orbit_ops) {
      ops = *job_.orbit_ops;
    } else {
      ops = {{HarveyTag::kV1, 0}, {HarveyTag::kV2, 0}, {HarveyTag::kV3, 0},
             {HarveyTag::kV4, 0}};
      for (std::uint32_t j = 1; j < job_.signature.genus(); ++j) {
        ops.push_back({HarveyTag::kBhat, j});
      }
    }
    std::size_t const cap = opts_.cap.value_or(job_.cap);
    OrbitResult const r =
        enumerate_orbit(job_.phi, ops, job_.group, job_.signature, cap);
    if (machine()) {
      ordered_json vs = ordered_json::array();
      for (auto const& v : r.vectors) {
        vs.push_back(to_string(v, job_.group));
      }
      out_ << ordered_json{{"size", r.vectors.size()},
                           {"truncated", r.truncated},
                           {"vectors", vs}}
                  .dump()
           << '\n';
    } else {
      header("Orbit under Harvey operations");
      out_ << "ops:";
      for (HarveyOp const op : ops) {
        out_ << ' ' << to_string(op);
      }
      out_ << "\nsize: " << r.vectors.size()
           << (r.truncated ? " (truncated at cap " + std::to_string(cap) + ")" : "")
           << '\n';
      for (auto const& v : r.vectors) {
        out_ << "  " << to_string(v, job_.group) << '\n';
      }
    }
    return kExitOk;
  }

 private:
  void header(std::string const& title) {
    out_ << "== " << title << " ==\n";
    out_ << "group order " << job_.group.order() << ", signature "
         << to_string(job_.signature) << ", vector "
         << to_string(job_.phi, job_.group) << '\n';
  }

  ValidationReport check() const {
    return surfkernel::validate(job_.signature, job_.group, job_.phi);
  }

  void require_valid() const {
    ValidationReport const report = check();
    if (!report.valid()) {
      throw Exit{kExitValidation, "invalid surface-kernel map: " +
                                      join(report.failures())};
    }
  }

  SchreierTransversal transversal() const {
    if (job_.transversal) {
      return transversal_from(job_.group, job_.phi, job_.signature,
                              *job_.transversal);
    }
    return minimal_transversal(job_.group, job_.phi, job_.signature);
  }

  KernelPresentation simplified(SchreierTransversal const& t) const {
    return simplify(raw_presentation(job_.signature, job_.group, job_.phi, t));
  }

  void print_transversal(SchreierTransversal const& t) {
    out_ << "transversal:\n";
    for (GroupElement const g : job_.group.elements()) {
      out_ << "  " << job_.group.name(g) << " -> " << to_string(t.rep(g)) << '\n';
    }
  }

  std::vector<std::string> labels(HomologyBasis const& basis) const {
    std::vector<std::string> out;
    for (KernelGen const s : basis.elements) {
      out.push_back(to_string(s, job_.group));
    }
    return out;
  }

  static std::vector<std::vector<std::int64_t>> rows(IntMatrix const& m) {
    std::vector<std::vector<std::int64_t>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t k = 0; k < m.size(); ++k) {
        out[i].push_back(m.at(i, k));
      }
    }
    return out;
  }

  static std::string join(std::vector<std::string> const& parts) {
    std::string out;
    for (auto const& p : parts) {
      out += (out.empty() ? "" : "; ") + p;
    }
    return out;
  }

  Options opts_;
  std::ostream& out_;
  JobSpec job_;
};

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"surfkernel: surface kernel presentations and group actions"};
  app.require_subcommand(1);
  Options opts;

  using Method = int (Runner::*)();
  std::vector<std::pair<CLI::App*, Method>> commands;
  auto add = [&](char const* name, char const* help, Method m) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--job", opts.job, "job file (JSON)")->required();
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--transversal", opts.transversal,
                    "transversal override (JSON object element -> word)");
    commands.emplace_back(sub, m);
    return sub;
  };
  add("validate", "check the generating vector", &Runner::validate);
  add("genus", "Riemann-Hurwitz genus of the kernel", &Runner::genus);
  add("present", "raw Reidemeister-Schreier presentation", &Runner::present);
  add("simplify", "Tietze-simplified presentation", &Runner::simplify_cmd);
  add("homology", "integer matrices of the action on homology", &Runner::homology);
  add("harvey", "apply a Harvey program", &Runner::harvey)
      ->add_option("--program", opts.program, "comma-separated ops, e.g. V1,Bhat:1");
  add("orbit", "orbit of the vector under Harvey operations", &Runner::orbit)
      ->add_option("--ops", opts.ops, "comma-separated ops");
  commands.back().first->add_option("--cap", opts.cap, "maximum orbit size");
  add("adapted", "adapted homology basis check", &Runner::adapted);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    for (auto const& [sub, method] : commands) {
      if (sub->parsed()) {
        Runner runner(opts, out);
        return (runner.*method)();
      }
    }
    return kExitParse;
  } catch (Exit const& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (SimplificationIncomplete const& e) {
    err << "error: " << e.what() << '\n';
    return kExitSimplification;
  } catch (Error const& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace surfkernel::cli
