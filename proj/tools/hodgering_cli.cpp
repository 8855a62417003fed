#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hodgering/constructors.hpp"
#include "hodgering/filt.hpp"
#include "hodgering/io.hpp"
#include "hodgering/lefschetz.hpp"

namespace hr = hodgering;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitContradiction = 2;
constexpr int kExitIo = 3;

std::string describe(const hr::Element& x) {
  std::ostringstream out;
  bool first = true;
  for (hr::Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    if (!first) out << " ";
    out << i << ":" << x(i);
    first = false;
  }
  return first ? "0" : out.str();
}

const hr::Element& element_or_throw(const hr::RingDocument& doc,
                                    const std::string& name) {
  auto it = doc.elements.find(name);
  if (it == doc.elements.end())
    throw hr::ParseError("document has no element named \"" + name + "\"");
  return it->second;
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("HODGERING_SEED"))
    return std::strtoull(env, nullptr, 10);
  return seed;
}

hr::Report build_verify_report(const hr::RingDocument& doc, const std::string& name,
                               hr::Index trials, std::uint64_t seed, int bound) {
  const hr::HodgeRing& r = doc.ring;
  const hr::Element& sigma = element_or_throw(doc, name);
  hr::Report rep;
  rep.hodge_table = hr::hodge_numbers(r);
  rep.weight_table = hr::weight_numbers(r);
  rep.nu = hr::nilpotency_indices(r).nu;

  rep.add({"validate", true, false, "", ""});

  bool symplectic = false;
  if (r.dim_c() % 2 != 0) {
    rep.add({"symplectic", false, false, "odd complex dimension", ""});
  } else {
    const auto verdict = hr::is_symplectic(r, sigma);
    symplectic = verdict.symplectic;
    std::string witness;
    if (!symplectic && verdict.first_failure) {
      std::ostringstream w;
      w << "first failure at (m, l) = (" << verdict.first_failure->first << ", "
        << verdict.first_failure->second << ")";
      witness = w.str();
    } else if (!symplectic) {
      witness = "sigma = 0";
    }
    rep.add({"symplectic", symplectic, false, witness, ""});

    const bool reconstructed = hr::reconstruct_check(r, sigma);
    if (reconstructed != symplectic)
      throw hr::PaperContradiction(
          "reconstruct_check disagrees with is_symplectic");
    rep.add({"filtration reconstruction", true, false,
             reconstructed ? "G_sigma = F" : "G_sigma != F, matching verdict", ""});
  }

  const auto weight = hr::pure_weight(r, sigma);
  rep.add({"pure weight", true, false,
           weight ? "w = " + std::to_string(*weight) : "mixed weight", ""});

  if (!symplectic) {
    rep.add({"curious hard Lefschetz", true, true, "", "not symplectic"});
    return rep;
  }

  const int d = r.half_dim();
  const bool tate = hr::is_hodge_tate(r);
  hr::chl_iff_pure_weight2_check(r, sigma);
  rep.add({"Hodge-Tate", true, false, tate ? "yes" : "no", ""});
  if (tate) {
    const auto witness = hr::curious_hl(r, trials, seed, bound, sigma);
    if (witness) {
      std::ostringstream w;
      w << "alpha = " << describe(witness->alpha) << " after "
        << witness->trials_used << " trial(s), seed " << witness->seed;
      rep.add({"curious hard Lefschetz", true, false, w.str(), ""});
    } else {
      std::ostringstream w;
      w << "no witness in " << trials << " trials";
      rep.add({"curious hard Lefschetz", false, false, w.str(), ""});
    }
  } else {
    rep.add({"curious hard Lefschetz", true, true, "", "not Hodge-Tate"});
  }

  if (weight && *weight == 1) {
    const auto wv = hr::weight_vanishing_check_w1(r, sigma);
    std::string witness;
    if (wv.part2_applicable)
      witness = wv.part2_ok ? "sharpened range holds" : "sharpened range fails";
    rep.add({"weight vanishing (w = 1)", wv.strict_ok && (!wv.part2_applicable || wv.part2_ok),
             false, witness, ""});
    if (r.conjugation) {
      const auto lb = hr::lower_bounds_check(r, sigma);
      rep.add({"lower bounds (w = 1)",
               lb.ok && (!lb.symmetric_power_checked || lb.symmetric_power_ok),
               false, "", ""});
    } else {
      rep.add({"lower bounds (w = 1)", true, true, "", "NoConjugation"});
    }
  }

  const bool top_nonzero = !hr::is_zero_vec(hr::power(r, sigma, d));
  const bool above_zero = hr::is_zero_vec(hr::power(r, sigma, d + 1));
  rep.add({"sigma power laws", top_nonzero && above_zero, false,
           top_nonzero && above_zero ? "sigma^d != 0, sigma^{d+1} = 0" : "", ""});

  return rep;
}

int cmd_verify(const std::string& path, const std::string& element,
               hr::Index trials, std::uint64_t seed, int bound,
               const std::string& format) {
  const hr::RingDocument doc = hr::load(path);
  const hr::Report rep = build_verify_report(doc, element, trials, seed, bound);
  std::cout << (format == "json" ? hr::report_json(rep) : hr::report_text(rep));
  return rep.passed ? kExitPass : kExitFail;
}

int cmd_diamond(const std::string& path, const std::string& format) {
  const hr::RingDocument doc = hr::load(path);
  std::cout << (format == "json" ? hr::diamond_json(doc.ring)
                                 : hr::render_diamond(doc.ring));
  return kExitPass;
}

int cmd_build_torus(const std::string& matrix_path, const std::string& out) {
  const hr::Mat a = hr::load_matrix(matrix_path);
  auto [ring, sigma] = hr::torus_ring(a);
  hr::RingDocument doc{std::move(ring), {{"sigma", std::move(sigma)}}};
  hr::save(doc, out);
  return kExitPass;
}

int cmd_product(const std::string& path1, const std::string& path2,
                const std::string& out) {
  const hr::RingDocument d1 = hr::load(path1);
  const hr::RingDocument d2 = hr::load(path2);
  hr::KunnethResult k = hr::kunneth_full(d1.ring, d2.ring);
  hr::RingDocument doc;
  // Named elements combine as x (x) 1 + 1 (x) y when both factors define
  // the name, and extend by the unit otherwise.
  for (const auto& [name, x] : d1.elements) {
    auto it = d2.elements.find(name);
    doc.elements[name] =
        it != d2.elements.end()
            ? hr::Element(hr::tensor_element(k, x, d2.ring.unit) +
                          hr::tensor_element(k, d1.ring.unit, it->second))
            : hr::tensor_element(k, x, d2.ring.unit);
  }
  for (const auto& [name, y] : d2.elements)
    if (!d1.elements.count(name))
      doc.elements[name] = hr::tensor_element(k, d1.ring.unit, y);
  doc.ring = std::move(k.ring);
  hr::save(doc, out);
  return kExitPass;
}

int cmd_chl(const std::string& path, const std::string& element,
            hr::Index trials, std::uint64_t seed, int bound) {
  const hr::RingDocument doc = hr::load(path);
  std::optional<hr::Element> hint;
  if (auto it = doc.elements.find(element); it != doc.elements.end())
    hint = it->second;
  const auto witness = hr::curious_hl(doc.ring, trials, seed, bound, hint);
  if (!witness) {
    std::cout << "NONE after " << trials << " trial(s)\n";
    return kExitFail;
  }
  std::cout << "witness alpha = " << describe(witness->alpha) << " ("
            << witness->trials_used << " trial(s), seed " << witness->seed
            << ")\n";
  return kExitPass;
}

int cmd_indices(const std::string& path) {
  const hr::RingDocument doc = hr::load(path);
  for (const auto& [l, v] : hr::nilpotency_indices(doc.ring).nu)
    std::cout << "nu_" << l << " = " << v << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic Hodge ring toolkit"};
  app.require_subcommand(1);

  std::string path, path2, out_path, element = "sigma", format = "text";
  long long trials = 32, seed = 0;
  int bound = 10;

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--trials", trials, "Random witness trials")->capture_default_str();
    cmd->add_option("--seed", seed, "RNG seed (HODGERING_SEED overrides)")->capture_default_str();
    cmd->add_option("--bound", bound, "Coefficient bound for random draws")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "Run the full check suite on a ring document");
  verify->add_option("path", path, "Ring document")->required();
  verify->add_option("--element", element, "Symplectic element name")->capture_default_str();
  verify->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  add_search_flags(verify);

  auto* diamond = app.add_subcommand("diamond", "Print the Hodge diamond");
  diamond->add_option("path", path, "Ring document")->required();
  diamond->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* build = app.add_subcommand("build-torus", "Build a torus ring from an alternating matrix");
  build->add_option("matrix", path, "JSON matrix file")->required();
  build->add_option("out", out_path, "Output ring document")->required();

  auto* product = app.add_subcommand("product", "Tensor product of two ring documents");
  product->add_option("path1", path, "First ring document")->required();
  product->add_option("path2", path2, "Second ring document")->required();
  product->add_option("out", out_path, "Output ring document")->required();

  auto* chl = app.add_subcommand("chl", "Search for a curious-hard-Lefschetz witness");
  chl->add_option("path", path, "Ring document")->required();
  chl->add_option("--element", element, "Hint element name")->capture_default_str();
  add_search_flags(chl);

  auto* indices = app.add_subcommand("indices", "Print nilpotency indices per degree");
  indices->add_option("path", path, "Ring document")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto seed_val = effective_seed(static_cast<std::uint64_t>(seed));
    if (verify->parsed())
      return cmd_verify(path, element, trials, seed_val, bound, format);
    if (diamond->parsed()) return cmd_diamond(path, format);
    if (build->parsed()) return cmd_build_torus(path, out_path);
    if (product->parsed()) return cmd_product(path, path2, out_path);
    if (chl->parsed()) return cmd_chl(path, element, trials, seed_val, bound);
    if (indices->parsed()) return cmd_indices(path);
  } catch (const hr::PaperContradiction& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const hr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const hr::SchemaVersionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const hr::ValidationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const hr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitIo;
}
