// Generated by tests/oracle/gen_oracles.py (sympy 1.14.0, mpmath 1.3.0). Do not edit.
#pragma once
#include <string>
#include <vector>

namespace oracle {

struct PolyCase {
  std::vector<int> lambda;
  int n;  // -1 for H_lambda itself
  std::vector<std::string> coeffs;  // ascending; empty = zero polynomial
};

inline const std::vector<PolyCase> kPolys = {
    {{1}, -1, {"0", "2"}},
    {{2}, -1, {"-2", "0", "4"}},
    {{1, 1}, -1, {"4", "0", "8"}},
    {{2, 1}, -1, {"0", "0", "0", "32"}},
    {{2, 2}, -1, {"24", "0", "0", "0", "32"}},
    {{3, 1}, -1, {"-24", "0", "-96", "0", "96"}},
    {{3, 2, 1}, -1, {"0", "0", "0", "0", "0", "0", "8192"}},
    {{3, 3, 1, 1}, -1, {"3686400", "0", "14745600", "0", "0", "0", "3932160", "0", "3932160"}},
    {{4, 4, 2, 2}, -1, {"309657600", "0", "0", "0", "1238630400", "0", "0", "0", "141557760", "0", "0", "0", "62914560"}},
    {{1, 1}, 1, {}},
    {{1, 1}, 2, {}},
    {{1, 1}, 3, {"0", "192", "0", "128"}},
    {{1, 1}, 4, {"-192", "0", "768", "0", "768"}},
    {{1, 1}, 5, {"0", "-3840", "0", "0", "0", "3072"}},
    {{1, 1}, 6, {"3840", "0", "-23040", "0", "-15360", "0", "10240"}},
    {{1, 1}, 7, {"0", "80640", "0", "-53760", "0", "-107520", "0", "30720"}},
    {{1, 1}, 8, {"-80640", "0", "645120", "0", "215040", "0", "-516096", "0", "86016"}},
    {{2, 2}, 2, {"96", "0", "192"}},
    {{2, 2}, 3, {"0", "192", "0", "128"}},
    {{2, 2}, 4, {}},
    {{2, 2}, 5, {}},
    {{2, 2}, 6, {"-1152", "0", "2304", "0", "1536", "0", "1024"}},
    {{2, 2}, 7, {"0", "-11520", "0", "7680", "0", "3072", "0", "6144"}},
    {{2, 2}, 8, {"23040", "0", "-92160", "0", "0", "0", "-24576", "0", "24576"}},
    {{2, 2}, 9, {"0", "322560", "0", "-430080", "0", "0", "0", "-245760", "0", "81920"}},
    {{2, 2}, 10, {"-483840", "0", "2903040", "0", "-1290240", "0", "860160", "0", "-1351680", "0", "245760"}},
    {{2, 1}, 1, {"0", "96"}},
    {{2, 1}, 2, {}},
    {{2, 1}, 3, {"0", "-192", "0", "-128"}},
    {{2, 1}, 4, {}},
    {{2, 1}, 5, {"0", "1152", "0", "1536", "0", "1536"}},
    {{2, 1}, 6, {"0", "0", "0", "0", "0", "0", "8192"}},
    {{2, 1}, 7, {"0", "-11520", "0", "-23040", "0", "-46080", "0", "30720"}},
    {{2, 1}, 8, {"0", "0", "0", "0", "0", "0", "-344064", "0", "98304"}},
    {{3, 1}, 2, {"-192", "0", "384"}},
    {{3, 1}, 3, {}},
    {{3, 1}, 4, {"192", "0", "-768", "0", "-768"}},
    {{3, 1}, 5, {"0", "-1152", "0", "-1536", "0", "-1536"}},
    {{3, 1}, 6, {}},
    {{3, 1}, 7, {"0", "23040", "0", "15360", "0", "-6144", "0", "12288"}},
    {{3, 1}, 8, {"-11520", "0", "92160", "0", "92160", "0", "-122880", "0", "61440"}},
    {{3, 1}, 9, {"0", "-483840", "0", "0", "0", "774144", "0", "-884736", "0", "221184"}},
    {{4, 4, 2, 2}, 8, {"14863564800", "0", "59454259200", "0", "0", "0", "15854469120", "0", "15854469120"}},
    {{4, 4, 2, 2}, 12, {"-59454259200", "0", "0", "0", "237817036800", "0", "126835752960", "0", "190253629440", "0", "72477573120", "0", "12079595520"}},
    {{4, 4, 2, 2}, 13, {"0", "-594542592000", "0", "0", "0", "475634073600", "0", "543581798400", "0", "452984832000", "0", "144955146240", "0", "24159191040"}},
    {{4, 4, 2, 2}, 20, {"49442161950720000", "0", "-395537295605760000", "0", "197768647802880000", "0", "-316429836484608000", "0", "678063935324160000", "0", "-180817049419776000", "0", "52966610436096000", "0", "-13567801688064000", "0", "5740223791104000", "0", "-5566277615616000", "0", "695784701952000"}},
    {{4, 4, 2, 2}, 40, {"12150341676591909040910499840000000", "0", "-340209566944573453145493995520000000", "0", "1425640090053450660800165314560000000", "0", "-2475429610910991601934832500736000000", "0", "4212118447885195134182306611200000000", "0", "-6039941276186047821225520005120000000", "0", "5095274711463761322755915513856000000", "0", "-2678791813122967342216139243520000000", "0", "1040829620546870902682618639155200000", "0", "-391725766749424765873869029376000000", "0", "178546195144223582673452610355200000", "0", "-75675874698814941546719005900800000", "0", "22491826913283265689335680204800000", "0", "-4372606572420636925605571461120000", "0", "557736834174828525516541132800000", "0", "-47144773569084833225810903040000", "0", "2640753729120546985334538240000", "0", "-96343103358546884910120960000", "0", "2188503792578384269148160000", "0", "-27963705770272610058240000", "0", "152807135356680929280000"}},
};

struct ForbiddenCase {
  std::vector<int> lambda;
  std::vector<int> forbidden_in_domain;  // n >= |lambda| - r with deg P_n != n
};

inline const std::vector<ForbiddenCase> kForbidden = {
    {{1}, {1}},
    {{2}, {3}},
    {{1, 1}, {1, 2}},
    {{3}, {5}},
    {{2, 1}, {2, 4}},
    {{1, 1, 1}, {1, 2, 3}},
    {{4}, {7}},
    {{3, 1}, {3, 6}},
    {{2, 2}, {4, 5}},
    {{2, 1, 1}, {2, 3, 5}},
    {{1, 1, 1, 1}, {1, 2, 3, 4}},
    {{5}, {9}},
    {{4, 1}, {4, 8}},
    {{3, 2}, {5, 7}},
    {{3, 1, 1}, {3, 4, 7}},
    {{2, 2, 1}, {3, 5, 6}},
    {{2, 1, 1, 1}, {2, 3, 4, 6}},
    {{1, 1, 1, 1, 1}, {1, 2, 3, 4, 5}},
};

struct RealCountCase {
  std::vector<int> lambda;
  int n;
  int distinct_real;
  int real_with_multiplicity;
};

inline const std::vector<RealCountCase> kRealCounts = {
    {{1, 1}, 3, 1, 1},
    {{1, 1}, 4, 2, 2},
    {{1, 1}, 5, 3, 3},
    {{1, 1}, 8, 6, 6},
    {{1, 1}, 11, 9, 9},
    {{2, 2}, 6, 2, 2},
    {{2, 2}, 7, 3, 3},
    {{2, 2}, 9, 5, 5},
    {{2, 2}, 14, 10, 10},
    {{2, 1}, 3, 1, 1},
    {{2, 1}, 5, 1, 1},
    {{2, 1}, 6, 1, 6},
    {{3, 1}, 4, 2, 2},
    {{3, 1}, 7, 1, 1},
    {{3, 1}, 9, 3, 3},
    {{1}, 9, 7, 9},
    {{2, 1}, 8, 3, 8},
    {{4, 4, 2, 2}, 12, 2, 2},
    {{4, 4, 2, 2}, 13, 3, 3},
    {{4, 4, 2, 2}, 20, 8, 8},
    {{4, 4, 2, 2}, 40, 28, 28},
};

struct GcdCase {
  std::vector<int> lambda;
  int gcd_degree;
  int origin_multiplicity;  // multiplicity of 0 as a zero of H_lambda
};

inline const std::vector<GcdCase> kGcd = {
    {{1}, 0, 1},
    {{2}, 0, 0},
    {{1, 1}, 0, 0},
    {{3}, 0, 1},
    {{2, 1}, 2, 3},
    {{1, 1, 1}, 0, 1},
    {{4}, 0, 0},
    {{3, 1}, 0, 0},
    {{2, 2}, 0, 0},
    {{2, 1, 1}, 0, 0},
    {{1, 1, 1, 1}, 0, 0},
    {{5}, 0, 1},
    {{4, 1}, 2, 3},
    {{3, 2}, 0, 1},
    {{3, 1, 1}, 0, 1},
    {{2, 2, 1}, 0, 1},
    {{2, 1, 1, 1}, 2, 3},
    {{1, 1, 1, 1, 1}, 0, 1},
    {{6}, 0, 0},
    {{5, 1}, 0, 0},
    {{4, 2}, 0, 0},
    {{4, 1, 1}, 0, 0},
    {{3, 3}, 0, 0},
    {{3, 2, 1}, 5, 6},
    {{3, 1, 1, 1}, 0, 0},
    {{2, 2, 2}, 0, 0},
    {{2, 2, 1, 1}, 0, 0},
    {{2, 1, 1, 1, 1}, 0, 0},
    {{1, 1, 1, 1, 1, 1}, 0, 0},
    {{7}, 0, 1},
    {{6, 1}, 2, 3},
    {{5, 2}, 0, 1},
    {{5, 1, 1}, 0, 1},
    {{4, 3}, 2, 3},
    {{4, 2, 1}, 0, 1},
    {{4, 1, 1, 1}, 2, 3},
    {{3, 3, 1}, 0, 1},
    {{3, 2, 2}, 0, 1},
    {{3, 2, 1, 1}, 0, 1},
    {{3, 1, 1, 1, 1}, 0, 1},
    {{2, 2, 2, 1}, 2, 3},
    {{2, 2, 1, 1, 1}, 0, 1},
    {{2, 1, 1, 1, 1, 1}, 2, 3},
    {{1, 1, 1, 1, 1, 1, 1}, 0, 1},
};

struct ZeroCase {
  std::vector<int> lambda;
  int n;
  std::vector<std::pair<std::string, std::string>> zeros;
};

inline const std::vector<ZeroCase> kZeros = {
    {{1, 1}, 6, {{"-1.542525604835075912104881591213983834459", "0"}, {"-0.3907731370835760280133864396145480863683", "0"}, {"0", "-1.015917755646566141068544237783581555893"}, {"0", "1.015917755646566141068544237783581555893"}, {"0.3907731370835760280133864396145480863683", "0"}, {"1.542525604835075912104881591213983834459", "0"}}},
    {{2, 2}, 7, {{"-0.9004146598795446725804627899237738773851", "0"}, {"-0.6577908513882311843711990724313246496183", "-1.043102144582711564457925239025788449079"}, {"-0.6577908513882311843711990724313246496183", "1.043102144582711564457925239025788449079"}, {"0", "0"}, {"0.6577908513882311843711990724313246496183", "-1.043102144582711564457925239025788449079"}, {"0.6577908513882311843711990724313246496183", "1.043102144582711564457925239025788449079"}, {"0.9004146598795446725804627899237738773851", "0"}}},
    {{2, 1}, 5, {{"-0.4277998385836760964846178831055881879216", "-0.8264458251405347400491203232926939088887"}, {"-0.4277998385836760964846178831055881879216", "0.8264458251405347400491203232926939088887"}, {"0", "0"}, {"0.4277998385836760964846178831055881879216", "-0.8264458251405347400491203232926939088887"}, {"0.4277998385836760964846178831055881879216", "0.8264458251405347400491203232926939088887"}}},
    {{}, 9, {{"-3.190993201781527607230047795380909124969", "0"}, {"-2.266580584531843111802096932837620348551", "0"}, {"-1.468553289216667931667015739248627982728", "0"}, {"-0.7235510187528375733226398645794120947065", "0"}, {"0", "0"}, {"0.7235510187528375733226398645794120947065", "0"}, {"1.468553289216667931667015739248627982728", "0"}, {"2.266580584531843111802096932837620348551", "0"}, {"3.190993201781527607230047795380909124969", "0"}}},
};

struct GaussHermiteCase {
  int n;
  std::vector<std::string> nodes;
  std::vector<std::string> weights;
};

inline const std::vector<GaussHermiteCase> kGaussHermite = {
    {1, {"0"}, {"1.772453850905516027298167483341145182798"}},
    {4, {"-1.650680123885784555883341111120745543789", "-0.5246476232752903178840602538347413414136", "0.5246476232752903178840602538347413414136", "1.650680123885784555883341111120745543789"}, {"0.08131283544724517714303455718988841176333", "0.8049140900055128365060491844806841796354", "0.8049140900055128365060491844806841796354", "0.08131283544724517714303455718988841176333"}},
    {7, {"-2.651961356835233492447082006516616114438", "-1.673551628767471445031801398303594819108", "-0.8162878828589646630387109590271458167429", "0", "0.8162878828589646630387109590271458167429", "1.673551628767471445031801398303594819108", "2.651961356835233492447082006516616114438"}, {"0.0009717812450995191541494242559389596444424", "0.0545155828191270305921785688416951259609", "0.4256072526101278005203174666663910354397", "0.8102646175568073267648765638130949407075", "0.4256072526101278005203174666663910354397", "0.0545155828191270305921785688416951259609", "0.0009717812450995191541494242559389596444424"}},
    {12, {"-3.889724897869781919271642747244191760148", "-3.020637025120889771710679375176763646004", "-2.279507080501059900187728569424341135039", "-1.59768263515260479670966277090457670824", "-0.9477883912401637437045781310601365136792", "-0.3142403762543591112766116340953371289721", "0.3142403762543591112766116340953371289721", "0.9477883912401637437045781310601365136792", "1.59768263515260479670966277090457670824", "2.279507080501059900187728569424341135039", "3.020637025120889771710679375176763646004", "3.889724897869781919271642747244191760148"}, {"0.0000002658551684356301606023114008768679442903", "0.00008573687043587858654569063231532409401897", "0.00390539058462906185999438432619531097415", "0.05160798561588392999187344236061309448155", "0.2604923102641611292333961397652475332449", "0.5701352362624795783471134822748004517362", "0.5701352362624795783471134822748004517362", "0.2604923102641611292333961397652475332449", "0.05160798561588392999187344236061309448155", "0.00390539058462906185999438432619531097415", "0.00008573687043587858654569063231532409401897", "0.0000002658551684356301606023114008768679442903"}},
};

struct OrthCase {
  std::vector<int> lambda;
  int n;
  int m;
  std::string norm_n;  // integral of P_n^2 exp(-x^2) / H_lambda^2
};

inline const std::vector<OrthCase> kNorms = {
    {{1, 1}, 3, 4, "680.622278747718154482496313603"},
    {{2, 2}, 6, 8, "5444.97822998174523585997050882"},
};

}  // namespace oracle
