#pragma once

#include <string_view>

namespace sea::cli {

struct ReferenceCritical {
  int n;
  int l;
  std::string_view value;  // decimal with its significant digits, or p/q when exact
};

inline constexpr ReferenceCritical kReferenceCritical[] = {
    {1, 0, "2"},
    {2, 0, "1/2"},          {2, 1, "0.3767388"},
    {3, 0, "2/9"},          {3, 1, "0.18638519"},   {3, 2, "0.1576540"},
    {4, 0, "1/8"},          {4, 1, "0.11042423"},   {4, 2, "0.09755514"},
    {4, 3, "0.08640416"},
    {5, 0, "2/25"},         {5, 1, "0.07281399"},   {5, 2, "0.06609952"},
    {5, 3, "0.05997137"},   {5, 4, "0.054505130"},
    {6, 0, "1/18"},         {6, 1, "0.05154187"},   {6, 2, "0.04765376"},
    {6, 3, "0.04397303"},   {6, 4, "0.040584332"},  {6, 5, "0.037504108"},
    {7, 0, "2/49"},         {7, 1, "0.03836901"},   {7, 2, "0.03594088"},
    {7, 3, "0.033579387"},  {7, 4, "0.031352334"},  {7, 5, "0.029284146"},
    {7, 6, "0.027378996"},
    {8, 0, "1/32"},         {8, 1, "0.02965680"},   {8, 2, "0.02805166"},
    {8, 3, "0.02645746"},   {8, 4, "0.024925430"},  {8, 5, "0.023478153"},
    {8, 6, "0.022124095"},  {8, 7, "0.0208642596"},
    {9, 0, "2/81"},         {9, 1, "0.02360076"},   {9, 2, "0.02249094"},
    {9, 3, "0.021370275"},  {9, 4, "0.020276903"},  {9, 5, "0.019229555"},
    {9, 6, "0.018237044"},  {9, 7, "0.0173026475"}, {9, 8, "0.0164264743"},
};

}  // namespace sea::cli
