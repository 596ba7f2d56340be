#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "thetacorr/charlattice.hpp"
#include "thetacorr/repdata.hpp"

namespace thetacorr {

struct CorpusEntry22 {
  GSO22Rep value;
  char row;  // 'a'..'f', the case of the GSO(2,2) lift
};

struct CorpusEntryGSp4 {
  GSp4Rep value;      // canonical
  std::string built;  // variant the element was constructed as
  std::string note;   // e.g. "pole" for reducibility-point data
};

struct UnramifiedTriple {
  Character chi1, chi2, chi;
  std::string note;
};

// Randomized data over one character context. Unitary symbols get orders in
// {2, 3, infinite}; norm exponents have denominators 1, 2 or 4.
struct Corpus {
  std::shared_ptr<CharContext> context;
  std::vector<CorpusEntry22> gso22;
  std::vector<GSO40Rep> gso40;
  std::vector<CorpusEntryGSp4> gsp4;  // includes the lifts of gso22 and gso40
  std::vector<UnramifiedTriple> unramified;
};

// `scale` multiplies the number of samples per case.
Corpus make_corpus(std::uint32_t seed, int scale = 1);

}  // namespace thetacorr
