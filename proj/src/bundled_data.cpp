#include "egtl/bundled_data.hpp"

#include <stdexcept>

namespace egtl::data {

namespace {

// 107 failure times (hours) of right rear brakes on D9G-66A caterpillar
// tractors, row-major in the original print order
const std::string kBarlow1975 =
    "# barlow1975: 107 right rear brake failure times (hours)\n"
    "56 753 1153 1586 2150 2624 3826 83 763 1154 1599 2156 2675 3995 104\n"
    "806 1193 1608 2160 2701 4007 116 834 1201 1723 2190 2755 4159 244 838\n"
    "1253 1769 2210 2877 4300 305 862 1313 1795 2220 2879 4487 429 897 1329\n"
    "1927 2248 2922 5074 452 904 1347 1957 2285 2986 5579 453 981 1454 2005\n"
    "2325 3092 5623 503 1007 1464 2010 2337 3160 6869 552 1008 1490 2016 2351\n"
    "3185 7739 614 1049 1491 2022 2437 3191 661 1069 1532 2037 2454 3439 673\n"
    "1107 1549 2065 2546 3617 683 1125 1568 2096 2565 3685 685 1141 1574 2139\n"
    "2584 3756\n";

// 100 cycles-to-failure of a polyester/viscose yarn at 2.3% strain,
// row-major in the original print order
const std::string kQuesenberry1982 =
    "# quesenberry1982: 100 yarn cycles-to-failure at 2.3% strain\n"
    "86 146 251 653 98 249 400 292 131 169 175 176 76 264 15\n"
    "364 195 262 88 264 157 220 42 321 180 198 38 20 61 121\n"
    "282 224 149 180 325 250 196 90 229 166 38 337 65 151 341\n"
    "40 40 135 597 246 211 180 93 315 353 571 124 279 81 186\n"
    "497 182 423 185 229 400 338 290 398 71 246 185 188 568 55\n"
    "55 61 244 20 284 393 396 203 829 239 286 194 277 143 198\n"
    "264 105 203 124 137 135 350 193 188 236\n";

}  // namespace

std::vector<std::string> bundled_names() { return {"barlow1975", "quesenberry1982"}; }

bool is_bundled(const std::string& name) {
    return name == "barlow1975" || name == "quesenberry1982";
}

const std::string& bundled_text(const std::string& name) {
    if (name == "barlow1975") return kBarlow1975;
    if (name == "quesenberry1982") return kQuesenberry1982;
    throw std::invalid_argument("unknown bundled dataset: " + name);
}

}  // namespace egtl::data
