// Rewrites the shipped fixture documents from their in-library definitions.
#include <iostream>

#include "vrsp/contract.hpp"
#include "vrsp/document.hpp"
#include "vrsp/figures.hpp"

using namespace vrsp;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";

  auto dump = [&](const std::string& name, const GraphDocument& doc) {
    std::string path = dir + "/" + name;
    write_file_atomic(path, emit_document(doc));
    std::cout << path << "\n";
  };

  GraphDocument f1 = figures::fig1();
  dump("fig1.json", f1);
  dump("fig2.json", figures::fig2());
  dump("fig4.json", figures::fig4());
  dump("fig5.json", figures::fig5());

  // The two factors of fig1's caption decomposition, for product/iso demos.
  ContractionSpec left{{f1.sets.at("R2"), f1.sets.at("R3"), f1.sets.at("R4")}};
  ContractionSpec right{{f1.sets.at("C4"), f1.sets.at("C5")}};
  GraphDocument left_doc, right_doc;
  left_doc.graph = contract_seq(f1.graph, left).graph;
  right_doc.graph = contract_seq(f1.graph, right).graph;
  dump("fig1_left.json", left_doc);
  dump("fig1_right.json", right_doc);
  return 0;
}
