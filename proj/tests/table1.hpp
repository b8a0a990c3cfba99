#pragma once

// Published predictions for rational curves of degree 1..10.

#include <array>
#include <string>
#include <utility>

namespace table1 {

using Column = std::pair<const char*, std::array<const char*, 10>>;

inline const std::array<Column, 4>& columns() {
  static const std::array<Column, 4> cols = {{
      {"3,3",
       {"1053", "52812", "6424326", "1139448384", "249787892583", "62660964509532",
        "17256453900822009", "5088842568426162960", "1581250717976557887945",
        "512045241907209106828608"}},
      {"2,4",
       {"1280", "92288", "15655168", "3883902528", "1190923282176", "417874605342336",
        "160964588281789696", "66392895625625639488", "28855060316616488359936",
        "13069047760169269024822656"}},
      {"2,2,2,2",
       {"512", "9728", "416256", "25703936", "1957983744", "170535923200", "16300354777600",
        "1668063096387072", "179845756064329728", "20206497983891554816"}},
      {"2,2,3",
       {"720", "22428", "1611504", "168199200", "21676931712", "3195557904564",
        "517064870788848", "89580965599606752", "16352303769375910848",
        "3110686153486233022944"}},
  }};
  return cols;
}

}  // namespace table1
