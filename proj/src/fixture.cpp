#include "proofinfo/fixture.hpp"

namespace proofinfo {

std::string builtin_example_document() {
  return R"json({
  "goals": ["Win(Bok)", "Win(Dok)", "Win(Fok)"],
  "proofs": [
    {"id": "QB1", "formulas": ["Day=Fri", "Brd(R2,Bok)", "Win(Bok)"]},
    {"id": "QB2", "formulas": ["Day≠Fri", "Brd(R2,Dok)", "Brd(R1,Bok)", "Win(Bok)"]},
    {"id": "QB3", "formulas": ["Day≠Fri", "Brd(R2,Dok)", "Win(Bok)∨Win(Fok)", "Brd(R3,Fok)", "¬Win(Fok)", "Win(Bok)"]},
    {"id": "QD1", "formulas": ["Brd(R1,Dok)", "Win(Dok)"]},
    {"id": "QD2", "formulas": ["Day=Fri", "Brd(R3,Fok)", "Brd(R2,Dok)", "Win(Dok)"]},
    {"id": "QD3", "formulas": ["Day=Fri", "Brd(R3,Fok)", "Brd(R1,Dok)", "Brd(R2,Dok)", "Win(Dok)"]},
    {"id": "QF1", "formulas": ["Day≠Fri", "Brd(R2,Dok)", "Win(Bok)∨Win(Fok)", "Brd(R3,Bok)", "¬Win(Bok)", "Win(Fok)"]}
  ]
}
)json";
}

std::string builtin_world_document() {
  return R"json({
  "participants": ["Bok", "Dok", "Fok"],
  "day_domain": ["Fri", "Other"],
  "sources": {
    "R1": "always_truthful",
    "R2": {"truthful_on": ["Fri"]},
    "R3": "always_deceitful"
  }
}
)json";
}

KnowledgeSystem builtin_example() { return parse_knowledge_system_text(builtin_example_document()); }

}  // namespace proofinfo
