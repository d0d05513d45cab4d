#pragma once

#include <string>

#include "proofinfo/knowledge_system.hpp"

namespace proofinfo {

/// The competition-winner knowledge system: proofs QB1..QB3, QD1..QD3 and
/// QF1 over goals Win(Bok), Win(Dok), Win(Fok).
KnowledgeSystem builtin_example();

/// The same system as a knowledge-system document.
std::string builtin_example_document();

/// Matching world document: R1 always truthful, R2 truthful on Fridays,
/// R3 always deceitful.
std::string builtin_world_document();

}  // namespace proofinfo
