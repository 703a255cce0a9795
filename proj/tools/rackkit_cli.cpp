#include <algorithm>
#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rackkit/checks.hpp"
#include "rackkit/enumerate.hpp"
#include "rackkit/errors.hpp"
#include "rackkit/free.hpp"
#include "rackkit/functors.hpp"
#include "rackkit/homsearch.hpp"
#include "rackkit/permutation.hpp"
#include "rackkit/rack.hpp"
#include "rackkit/rackfile.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAxiomFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted.store(true); }

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

rackkit::StructureKind parse_kind(const std::string& name) {
  const auto kind = rackkit::kind_from_name(name);
  if (!kind) {
    throw std::invalid_argument("unknown kind '" + name +
                                "' (want rack, quandle, involutary, or kei)");
  }
  return *kind;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Range errors are malformed input; in-range non-bijections are axiom
// failures. Returns the exit code, or kExitOk when the block is a
// permutation.
int check_perm_block(const rackkit::RackFileBlock& block, const std::string& label) {
  for (std::size_t p = 0; p < block.entries.size(); ++p) {
    if (block.entries[p] < 0 || block.entries[p] >= block.n) {
      std::cout << label << ": invalid: image " << block.entries[p]
                << " out of range at position " << p << "\n";
      return kExitInputError;
    }
  }
  if (!rackkit::is_bijection(block.entries)) {
    std::cout << label << ": invalid: image sequence is not a bijection\n";
    return kExitAxiomFailure;
  }
  return kExitOk;
}

int cmd_validate(const std::string& path) {
  const rackkit::RackFile file = rackkit::parse_rack_file(read_input(path));
  for (std::size_t i = 0; i < file.blocks.size(); ++i) {
    const rackkit::RackFileBlock& block = file.blocks[i];
    const std::string label = "block " + std::to_string(i + 1);
    if (block.type == rackkit::RackFileBlock::Type::Rack) {
      const rackkit::RackValidation v = rackkit::validate_rack(block.n, block.entries);
      if (!v.ok()) {
        std::cout << label << ": invalid: " << v.issue->to_string() << "\n";
        return v.issue->is_input_error() ? kExitInputError : kExitAxiomFailure;
      }
      std::cout << label << ": valid rack of order " << block.n
                << " (quandle=" << yes_no(rackkit::is_quandle(*v.rack))
                << " involutary=" << yes_no(rackkit::is_involutary(*v.rack))
                << " kei=" << yes_no(rackkit::is_kei(*v.rack)) << ")\n";
    } else {
      if (const int code = check_perm_block(block, label); code != kExitOk) return code;
      std::cout << label << ": valid permutation of degree " << block.n << "\n";
    }
  }
  std::cout << file.blocks.size() << " block(s) ok\n";
  return kExitOk;
}

int cmd_census(int order, const std::string& kind_arg, int workers, bool emit_tables) {
  rackkit::SearchConfig config;
  config.order = order;
  config.kind = parse_kind(kind_arg);
  config.worker_count = workers;
  config.emit_tables = emit_tables;
  config.cancel = &g_interrupted;
  const rackkit::CensusRecord record = rackkit::run_census(config);
  std::cout << record.order << '\t' << rackkit::kind_name(record.kind) << '\t'
            << record.labeled_count << '\t' << record.iso_count << '\n';
  if (emit_tables) {
    rackkit::RackFile out;
    for (const rackkit::FiniteRack& rep : record.representatives) {
      out.blocks.push_back(rackkit::to_block(rep));
    }
    if (!out.blocks.empty()) std::cout << '\n' << rackkit::print_rack_file(out);
  }
  return kExitOk;
}

int cmd_transform(const std::string& path, const std::string& op_name, long long m,
                  bool no_validate) {
  const auto op = rackkit::functor_op_from_name(op_name);
  if (!op) {
    throw std::invalid_argument("unknown op '" + op_name +
                                "' (want psi, quandleify, canon-perm, or perm-rack)");
  }
  const rackkit::RackFile file = rackkit::parse_rack_file(read_input(path));
  rackkit::RackFile out;
  for (std::size_t i = 0; i < file.blocks.size(); ++i) {
    const rackkit::RackFileBlock& block = file.blocks[i];
    const std::string label = "block " + std::to_string(i + 1);
    if (block.type == rackkit::RackFileBlock::Type::Rack) {
      rackkit::FiniteRack rack;
      if (no_validate) {
        for (int v : block.entries) {
          if (v < 0 || v >= block.n) {
            std::cerr << "error: " << label << ": entry out of range\n";
            return kExitInputError;
          }
        }
        rack = rackkit::FiniteRack::unchecked(block.n, block.entries);
      } else {
        const rackkit::RackValidation v = rackkit::validate_rack(block.n, block.entries);
        if (!v.ok()) {
          std::cerr << "error: " << label << ": " << v.issue->to_string() << "\n";
          return v.issue->is_input_error() ? kExitInputError : kExitAxiomFailure;
        }
        rack = *v.rack;
      }
      switch (*op) {
        case rackkit::FunctorTag::Op::Power:
          out.blocks.push_back(rackkit::to_block(rackkit::power_op(rack, m)));
          break;
        case rackkit::FunctorTag::Op::Quandleify:
          out.blocks.push_back(rackkit::to_block(rackkit::quandleify(rack)));
          break;
        case rackkit::FunctorTag::Op::RackToPerm:
          out.blocks.push_back(rackkit::to_block(rackkit::rack_to_perm(rack)));
          break;
        default:
          std::cerr << "error: " << label << " is a rack block; op '" << op_name
                    << "' needs perm blocks\n";
          return kExitInputError;
      }
    } else {
      if (const int code = check_perm_block(block, label); code != kExitOk) return code;
      const rackkit::Permutation f = rackkit::Permutation::unchecked(block.entries);
      switch (*op) {
        case rackkit::FunctorTag::Op::Power:
          out.blocks.push_back(rackkit::to_block(f.pow(m)));
          break;
        case rackkit::FunctorTag::Op::PermToRack:
          out.blocks.push_back(rackkit::to_block(rackkit::perm_to_rack(f)));
          break;
        default:
          std::cerr << "error: " << label << " is a perm block; op '" << op_name
                    << "' needs rack blocks\n";
          return kExitInputError;
      }
    }
  }
  std::cout << rackkit::print_rack_file(out);
  return kExitOk;
}

int cmd_eval(const std::string& word_text, long long window) {
  const rackkit::RackWord word = rackkit::parse_word(word_text);
  std::cout << rackkit::free_rack_eval(word, window) << "\n";
  return kExitOk;
}

int cmd_center(int max_order, const std::string& kind_arg, bool composition) {
  const rackkit::StructureKind kind = parse_kind(kind_arg);
  std::vector<rackkit::FiniteRack> objects;
  for (int n = 1; n <= max_order; ++n) {
    rackkit::SearchConfig config;
    config.order = n;
    config.kind = kind;
    config.cancel = &g_interrupted;
    const rackkit::CensusRecord record = rackkit::run_census(config);
    objects.insert(objects.end(), record.representatives.begin(),
                   record.representatives.end());
  }
  const auto families = rackkit::natural_center(objects);
  std::cout << "objects " << objects.size() << "\n";
  std::cout << "families " << families.size() << "\n";
  for (std::size_t i = 0; i < families.size(); ++i) {
    std::cout << "family " << i << ":";
    for (const std::vector<int>& comp : families[i].components) {
      std::cout << " [";
      for (std::size_t x = 0; x < comp.size(); ++x) {
        if (x > 0) std::cout << ' ';
        std::cout << comp[x];
      }
      std::cout << ']';
    }
    std::cout << "\n";
  }
  const rackkit::NaturalFamily f_family = rackkit::canonical_automorphism_family(objects);
  const auto it = std::find(families.begin(), families.end(), f_family);
  if (it == families.end()) {
    std::cout << "canonical-family missing\n";
    return kExitAxiomFailure;
  }
  std::cout << "canonical-family index " << (it - families.begin()) << " order "
            << rackkit::canonical_automorphism_family_order(objects) << "\n";
  if (composition) {
    const auto table = rackkit::family_composition_table(families);
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t j = 0; j < table[i].size(); ++j) {
        std::cout << "compose " << i << " " << j << " -> " << table[i][j] << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_check(const std::string& path) {
  const rackkit::RackFile file = rackkit::parse_rack_file(read_input(path));
  for (std::size_t i = 0; i < file.blocks.size(); ++i) {
    const rackkit::RackFileBlock& block = file.blocks[i];
    const std::string label = "block " + std::to_string(i + 1);
    if (block.type == rackkit::RackFileBlock::Type::Rack) {
      const rackkit::RackValidation v = rackkit::validate_rack(block.n, block.entries);
      if (!v.ok()) {
        std::cout << label << ": invalid: " << v.issue->to_string() << "\n";
        return v.issue->is_input_error() ? kExitInputError : kExitAxiomFailure;
      }
      if (const auto failure = rackkit::run_identity_suite(*v.rack)) {
        std::cout << label << ": FAIL " << failure->identity << " (" << failure->detail
                  << ")\n";
        return kExitAxiomFailure;
      }
    } else {
      if (const int code = check_perm_block(block, label); code != kExitOk) return code;
      const rackkit::Permutation f = rackkit::Permutation::unchecked(block.entries);
      if (rackkit::rack_to_perm(rackkit::perm_to_rack(f)) != f) {
        std::cout << label << ": FAIL permutation-round-trip\n";
        return kExitAxiomFailure;
      }
    }
    std::cout << label << ": identities ok\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_sigint);

  CLI::App app{"finite racks, quandles, and kei: tables, censuses, constructions, checks"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "check every block of a file against the axioms");
  std::string validate_path;
  validate->add_option("path", validate_path, "input file, or - for stdin")->required();

  auto* census = app.add_subcommand("census", "enumerate structures of one order");
  int census_order = 1;
  std::string census_kind = "rack";
  int census_workers = 1;
  bool census_emit = false;
  census->add_option("--order", census_order, "structure order")->required();
  census->add_option("--kind", census_kind, "rack, quandle, involutary, or kei");
  census->add_option("--workers", census_workers, "worker thread count");
  census->add_flag("--emit-tables", census_emit, "print one representative block per class");

  auto* transform = app.add_subcommand("transform", "apply a construction to every block");
  std::string transform_path;
  std::string transform_op;
  long long transform_m = 1;
  bool transform_no_validate = false;
  transform->add_option("path", transform_path, "input file, or - for stdin")->required();
  transform->add_option("--op", transform_op, "psi, quandleify, canon-perm, or perm-rack")
      ->required();
  transform->add_option("-m", transform_m, "exponent for psi");
  transform->add_flag("--no-validate", transform_no_validate,
                      "skip axiom validation of rack blocks");

  auto* eval = app.add_subcommand("eval", "evaluate a word in the one-generator free rack");
  std::string eval_word;
  long long eval_window = rackkit::kDefaultWindow;
  eval->add_option("word", eval_word, "fully parenthesized word, e.g. '(x > x)'")->required();
  eval->add_option("--window", eval_window, "largest |value| any subterm may reach");

  auto* center = app.add_subcommand("center", "natural center of the full subcategory of all structures up to an order");
  int center_order = 2;
  std::string center_kind = "rack";
  bool center_composition = false;
  center->add_option("--order", center_order, "largest object order")->required();
  center->add_option("--kind", center_kind, "rack, quandle, involutary, or kei");
  center->add_flag("--composition", center_composition, "also print the composition table");

  auto* check = app.add_subcommand("check", "run the structural identity suite on every block");
  std::string check_path;
  check->add_option("path", check_path, "input file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_path);
    if (census->parsed()) return cmd_census(census_order, census_kind, census_workers, census_emit);
    if (transform->parsed())
      return cmd_transform(transform_path, transform_op, transform_m, transform_no_validate);
    if (eval->parsed()) return cmd_eval(eval_word, eval_window);
    if (center->parsed()) return cmd_center(center_order, center_kind, center_composition);
    if (check->parsed()) return cmd_check(check_path);
  } catch (const rackkit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const rackkit::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const rackkit::WindowExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const rackkit::SearchInterrupted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
