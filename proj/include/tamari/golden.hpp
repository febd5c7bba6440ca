#pragma once

// Published counts of maximal chains of T_n by length, and of those with
// no plus-full-sets. Mirrored by fixtures/chains_by_length.csv and
// fixtures/nofull.csv. Cells absent here are zero.

#include <array>
#include <string_view>

namespace tamari::golden {

struct LengthCell {
  int n;
  int length;
  std::string_view count;
};

struct NoFullCell {
  int i;
  int t;
  std::string_view count;
};

inline constexpr std::array<LengthCell, 93> kChainsByLength{{
    {1, 0, "1"},
    {2, 1, "1"},
    {3, 2, "1"},
    {3, 3, "1"},
    {4, 3, "1"},
    {4, 4, "4"},
    {4, 5, "2"},
    {4, 6, "2"},
    {5, 4, "1"},
    {5, 5, "10"},
    {5, 6, "22"},
    {5, 7, "22"},
    {5, 8, "18"},
    {5, 9, "13"},
    {5, 10, "12"},
    {6, 5, "1"},
    {6, 6, "20"},
    {6, 7, "112"},
    {6, 8, "232"},
    {6, 9, "382"},
    {6, 10, "348"},
    {6, 11, "456"},
    {6, 12, "390"},
    {6, 13, "420"},
    {6, 14, "334"},
    {6, 15, "286"},
    {7, 6, "1"},
    {7, 7, "35"},
    {7, 8, "392"},
    {7, 9, "1744"},
    {7, 10, "4474"},
    {7, 11, "8435"},
    {7, 12, "12732"},
    {7, 13, "17337"},
    {7, 14, "21158"},
    {7, 15, "27853"},
    {7, 16, "33940"},
    {7, 17, "41230"},
    {7, 18, "45048"},
    {7, 19, "50752"},
    {7, 20, "41826"},
    {7, 21, "33592"},
    {8, 7, "1"},
    {8, 8, "56"},
    {8, 9, "1092"},
    {8, 10, "9220"},
    {8, 11, "40414"},
    {8, 12, "123704"},
    {8, 13, "276324"},
    {8, 14, "550932"},
    {8, 15, "917884"},
    {8, 16, "1510834"},
    {8, 17, "2166460"},
    {8, 18, "3370312"},
    {8, 19, "4810150"},
    {8, 20, "7264302"},
    {8, 21, "10435954"},
    {8, 22, "15227802"},
    {8, 23, "20089002"},
    {8, 24, "27502220"},
    {8, 25, "32145952"},
    {8, 26, "36474460"},
    {8, 27, "30474332"},
    {8, 28, "23178480"},
    {9, 8, "1"},
    {9, 9, "84"},
    {9, 10, "2604"},
    {9, 11, "37444"},
    {9, 12, "280214"},
    {9, 13, "1321879"},
    {9, 14, "4578596"},
    {9, 15, "12512827"},
    {9, 16, "29499764"},
    {9, 17, "62132126"},
    {9, 18, "120837274"},
    {9, 19, "221484557"},
    {9, 20, "393364848"},
    {9, 21, "666955139"},
    {9, 22, "1134705692"},
    {9, 23, "1933708535"},
    {9, 24, "3316121272"},
    {9, 25, "5604687775"},
    {9, 26, "9577349974"},
    {9, 27, "15969449634"},
    {9, 28, "26387217370"},
    {9, 29, "41902119016"},
    {9, 30, "65076754954"},
    {9, 31, "93803013648"},
    {9, 32, "131664410706"},
    {9, 33, "158363393996"},
    {9, 34, "179041479392"},
    {9, 35, "150158648356"},
    {9, 36, "108995910720"},
}};

inline constexpr std::array<std::string_view, 9> kTotals{
    "1", "1", "2", "9", "98", "2981", "340549", "216569887", "994441978397"};

inline constexpr std::array<NoFullCell, 29> kNoFull{{
    {-1, 1, "1"},
    {0, 3, "1"},
    {1, 4, "2"},
    {1, 5, "10"},
    {2, 4, "2"},
    {2, 5, "8"},
    {2, 6, "112"},
    {2, 7, "280"},
    {3, 5, "18"},
    {3, 6, "220"},
    {3, 7, "1464"},
    {3, 8, "9240"},
    {3, 9, "15400"},
    {4, 5, "13"},
    {4, 6, "218"},
    {4, 7, "5322"},
    {4, 8, "42592"},
    {4, 9, "281424"},
    {4, 10, "1121120"},
    {4, 11, "1401400"},
    {5, 5, "12"},
    {5, 6, "324"},
    {5, 7, "8052"},
    {5, 8, "142944"},
    {5, 9, "1714700"},
    {5, 10, "12180168"},
    {5, 11, "65985920"},
    {5, 12, "190590400"},
    {5, 13, "190590400"},
}};

}  // namespace tamari::golden
