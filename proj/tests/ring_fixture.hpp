#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "synex/lexicon.hpp"

// Ten disjoint term communities with overlapping synsets. Frequencies inside
// a community range over 1..4, so every masking strategy finds eligible and
// ineligible picks, and level-3 retrieval is perfect while level 4 brings in
// competing candidates.
namespace testutil {

inline synex::Lexicon ring_lexicon() {
    std::vector<synex::Synset> synsets;
    for (int c = 0; c < 10; ++c) {
        int pool = 6 + c % 3;
        for (int j = 0; j < 5; ++j) {
            synex::Synset s;
            char id[16];
            std::snprintf(id, sizeof id, "r%02d_%d", c, j);
            s.id = id;
            int size = 3 + j % 2;
            for (int t = 0; t < size; ++t) {
                int index = (j * 2 + t) % pool;
                char surface[16];
                std::snprintf(surface, sizeof surface, "t%02d_%02d", c, index);
                s.terms.push_back(synex::Term{surface, "xx"});
            }
            synsets.push_back(std::move(s));
        }
    }
    return synex::Lexicon(std::move(synsets));
}

} // namespace testutil
