// table_data.cpp
// The embedded reference classification table (40 rows). data/expected_table.json
// carries the same content for external tooling; a test asserts both agree.

#include "antican/classify.hpp"

namespace antican {

namespace {

const char* kTableJson = R"__tbl([{"no":1,"relations":"T1*T2+T3*T4+T5^2","exponents":[[1,1],[1,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","1","1","1","1"]],"torsion":[]},"antican_cube":"54","gorenstein_index":1},{"no":2,"relations":"T1*T2+T3*T4+T5^2","exponents":[[1,1],[1,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","5","2","4","3"]],"torsion":[]},"antican_cube":"729/20","gorenstein_index":20},{"no":3,"relations":"T1*T2+T3*T4+T5^2","exponents":[[1,1],[1,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[5]},"degrees":{"free":[["1","1","1","1","1"]],"torsion":[["2","3","1","4","0"]]},"antican_cube":"54/5","gorenstein_index":5},{"no":4,"relations":"T1*T2+T3*T4+T5^3","exponents":[[1,1],[1,1],[3]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","5","3","3","2"]],"torsion":[]},"antican_cube":"512/15","gorenstein_index":15},{"no":5,"relations":"T1*T2+T3*T4+T5^4","exponents":[[1,1],[1,1],[4]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","3","2","2","1"]],"torsion":[]},"antican_cube":"125/3","gorenstein_index":6},{"no":6,"relations":"T1*T2+T3*T4+T5^4","exponents":[[1,1],[1,1],[4]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[2]},"degrees":{"free":[["1","3","2","2","1"]],"torsion":[["1","1","1","1","0"]]},"antican_cube":"125/6","gorenstein_index":12},{"no":7,"relations":"T1*T2+T3*T4+T5^6","exponents":[[1,1],[1,1],[6]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["2","4","3","3","1"]],"torsion":[]},"antican_cube":"343/12","gorenstein_index":12},{"no":8,"relations":"T1*T2+T3^2*T4+T5^2","exponents":[[1,1],[2,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","3","1","2","2"]],"torsion":[]},"antican_cube":"125/3","gorenstein_index":6},{"no":9,"relations":"T1*T2+T3^2*T4+T5^2","exponents":[[1,1],[2,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","5","2","2","3"]],"torsion":[]},"antican_cube":"343/10","gorenstein_index":10},{"no":10,"relations":"T1*T2+T3^2*T4+T5^2","exponents":[[1,1],[2,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["3","7","4","2","5"]],"torsion":[]},"antican_cube":"1331/84","gorenstein_index":84},{"no":11,"relations":"T1*T2+T3^2*T4+T5^3","exponents":[[1,1],[2,1],[3]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["2","1","1","1","1"]],"torsion":[]},"antican_cube":"81/2","gorenstein_index":2},{"no":12,"relations":"T1*T2+T3^2*T4+T5^3","exponents":[[1,1],[2,1],[3]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["3","3","1","4","2"]],"torsion":[]},"antican_cube":"343/12","gorenstein_index":12},{"no":13,"relations":"T1*T2+T3^2*T4+T5^3","exponents":[[1,1],[2,1],[3]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[3]},"degrees":{"free":[["2","1","1","1","1"]],"torsion":[["1","2","1","1","0"]]},"antican_cube":"27/2","gorenstein_index":6},{"no":14,"relations":"T1*T2+T3^2*T4+T5^6","exponents":[[1,1],[2,1],[6]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["3","3","2","2","1"]],"torsion":[]},"antican_cube":"125/6","gorenstein_index":6},{"no":15,"relations":"T1*T2+T3^2*T4^2+T5^2","exponents":[[1,1],[2,2],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[2]},"degrees":{"free":[["1","3","1","1","2"]],"torsion":[["1","1","0","0","1"]]},"antican_cube":"64/3","gorenstein_index":6},{"no":16,"relations":"T1*T2+T3^2*T4^2+T5^3","exponents":[[1,1],[2,2],[3]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["3","3","2","1","2"]],"torsion":[]},"antican_cube":"125/6","gorenstein_index":6},{"no":17,"relations":"T1*T2+T3^3*T4+T5^2","exponents":[[1,1],[3,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","3","1","1","2"]],"torsion":[]},"antican_cube":"128/3","gorenstein_index":3},{"no":18,"relations":"T1*T2+T3^3*T4+T5^2","exponents":[[1,1],[3,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["2","4","1","3","3"]],"torsion":[]},"antican_cube":"343/12","gorenstein_index":12},{"no":19,"relations":"T1*T2+T3^3*T4+T5^2","exponents":[[1,1],[3,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["3","7","2","4","5"]],"torsion":[]},"antican_cube":"1331/84","gorenstein_index":84},{"no":20,"relations":"T1*T2+T3^3*T4+T5^2","exponents":[[1,1],[3,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[2]},"degrees":{"free":[["1","3","1","1","2"]],"torsion":[["1","1","0","0","1"]]},"antican_cube":"64/3","gorenstein_index":6},{"no":21,"relations":"T1*T2+T3^3*T4+T5^4","exponents":[[1,1],[3,1],[4]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[2]},"degrees":{"free":[["2","2","1","1","1"]],"torsion":[["1","1","1","1","0"]]},"antican_cube":"27/2","gorenstein_index":4},{"no":22,"relations":"T1*T2+T3^3*T4^2+T5^2","exponents":[[1,1],[3,2],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["3","5","2","1","4"]],"torsion":[]},"antican_cube":"343/15","gorenstein_index":30},{"no":23,"relations":"T1*T2+T3^3*T4^3+T5^2","exponents":[[1,1],[3,3],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["2","4","1","1","3"]],"torsion":[]},"antican_cube":"125/4","gorenstein_index":4},{"no":24,"relations":"T1*T2+T3^5*T4+T5^2","exponents":[[1,1],[5,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["2","4","1","1","3"]],"torsion":[]},"antican_cube":"125/4","gorenstein_index":4},{"no":25,"relations":"T1*T2+T3^6*T4+T5^2","exponents":[[1,1],[6,1],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["3","5","1","2","4"]],"torsion":[]},"antican_cube":"343/15","gorenstein_index":30},{"no":26,"relations":"T1*T2+T3*T4+T5^2, lambda*T3*T4+T5^2+T6^2","exponents":[[1,1],[1,1],[2],[2]],"generators":6,"m":0,"lambda":1,"class_group":{"free_rank":1,"torsion":[2]},"degrees":{"free":[["1","1","1","1","1","1"]],"torsion":[["1","1","0","0","1","0"]]},"antican_cube":"16","gorenstein_index":2},{"no":27,"relations":"T1*T2*T3+T4^3+T5^2","exponents":[[1,1,1],[3],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","1","4","2","3"]],"torsion":[]},"antican_cube":"125/4","gorenstein_index":4},{"no":28,"relations":"T1*T2*T3+T4^3+T5^2","exponents":[[1,1,1],[3],[2]],"generators":5,"m":0,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["2","3","1","2","3"]],"torsion":[]},"antican_cube":"125/6","gorenstein_index":6},{"no":29,"relations":"T1*T2+T3^3+T4^2","exponents":[[1,1],[3],[2]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","5","2","3","1"]],"torsion":[]},"antican_cube":"216/5","gorenstein_index":5},{"no":30,"relations":"T1*T2+T3^3+T4^2","exponents":[[1,1],[3],[2]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","5","2","3","2"]],"torsion":[]},"antican_cube":"343/10","gorenstein_index":10},{"no":31,"relations":"T1*T2+T3^3+T4^2","exponents":[[1,1],[3],[2]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","5","2","3","3"]],"torsion":[]},"antican_cube":"512/15","gorenstein_index":15},{"no":32,"relations":"T1*T2+T3^3+T4^2","exponents":[[1,1],[3],[2]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["1","5","2","3","4"]],"torsion":[]},"antican_cube":"729/20","gorenstein_index":20},{"no":33,"relations":"T1*T2+T3^4+T4^2","exponents":[[1,1],[4],[2]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[2]},"degrees":{"free":[["1","3","1","2","1"]],"torsion":[["1","1","0","1","0"]]},"antican_cube":"64/3","gorenstein_index":6},{"no":34,"relations":"T1*T2+T3^4+T4^2","exponents":[[1,1],[4],[2]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[2]},"degrees":{"free":[["1","3","1","2","2"]],"torsion":[["1","1","0","1","1"]]},"antican_cube":"125/6","gorenstein_index":12},{"no":35,"relations":"T1*T2+T3^5+T4^2","exponents":[[1,1],[5],[2]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["3","7","2","5","1"]],"torsion":[]},"antican_cube":"512/21","gorenstein_index":21},{"no":36,"relations":"T1*T2+T3^5+T4^2","exponents":[[1,1],[5],[2]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["3","7","2","5","4"]],"torsion":[]},"antican_cube":"1331/84","gorenstein_index":84},{"no":37,"relations":"T1*T2+T3^6+T4^2","exponents":[[1,1],[6],[2]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[2]},"degrees":{"free":[["2","4","1","3","1"]],"torsion":[["1","1","1","0","0"]]},"antican_cube":"125/8","gorenstein_index":8},{"no":38,"relations":"T1*T2+T3^3+T4^3","exponents":[[1,1],[3],[3]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[3]},"degrees":{"free":[["1","2","1","1","1"]],"torsion":[["1","2","2","0","0"]]},"antican_cube":"27/2","gorenstein_index":6},{"no":39,"relations":"T1*T2+T3^4+T4^3","exponents":[[1,1],[4],[3]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["5","7","3","4","1"]],"torsion":[]},"antican_cube":"512/35","gorenstein_index":35},{"no":40,"relations":"T1*T2+T3^4+T4^3","exponents":[[1,1],[4],[3]],"generators":5,"m":1,"lambda":0,"class_group":{"free_rank":1,"torsion":[]},"degrees":{"free":[["5","7","3","4","2"]],"torsion":[]},"antican_cube":"729/70","gorenstein_index":70}])__tbl";

}  // namespace

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> table = parse_table(kTableJson);
  return table;
}

}  // namespace antican
