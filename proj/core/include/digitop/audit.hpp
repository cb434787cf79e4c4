#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace digitop {

// Registry of critiqued published fixed-point assertions. Each record pins a
// verdict and carries machine-checkable evidence wherever the flaw or the
// trivialization is executable at desk scale. Citations use short literature
// keys; the registry is the single place those keys live.
enum class Verdict { Refuted, Unproven, Trivializes, Duplicate };

enum class EvidenceKind {
  Counterexample,  // concrete instance; its checks must pass
  Sweep,           // exhaustive sweep backed by a library operation
  GapDemo,         // executable demonstration that a proof step is invalid
  DocOnly,         // citation or prose note; nothing to execute
};

struct EvidenceSpec {
  EvidenceKind kind;
  std::string description;
};

struct AssertionRecord {
  std::string id;         // e.g. "SUG-3.1"
  std::string source;     // literature key + label, e.g. "Sug, Theorem 3.1"
  std::string statement;  // prose summary of the claim and its defect
  Verdict verdict;
  // Some records carry two facets (e.g. unproven as printed and trivial
  // under natural hypotheses); the secondary verdict captures the second.
  std::optional<Verdict> also;
  std::vector<EvidenceSpec> evidence;
};

// The full built-in registry in stable order.
const std::vector<AssertionRecord>& list_assertions();

// Lookup by id; nullptr when absent.
const AssertionRecord* find_assertion(const std::string& id);

enum class AuditStatus { Confirmed, Failed, SkippedDocOnly };

struct AuditCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct AuditReport {
  std::string id;
  AuditStatus status;
  std::vector<AuditCheck> checks;
};

struct AuditOptions {
  std::uint64_t budget = 10'000'000;
  // Infinite-domain counterexamples are verified on the prefix [1, prefix_n];
  // the unchecked remainder is stated in the report, never claimed.
  int prefix_n = 50;
};

// Executes a record's evidence. Counterexample, sweep, and gap-demo checks
// must all pass for Confirmed; records with only doc evidence return
// SkippedDocOnly with their citations. Throws std::invalid_argument for an
// unknown id.
AuditReport run_audit(const std::string& id, const AuditOptions& opts = {});

std::string to_string(Verdict v);
std::string to_string(EvidenceKind k);
std::string to_string(AuditStatus s);

}  // namespace digitop
