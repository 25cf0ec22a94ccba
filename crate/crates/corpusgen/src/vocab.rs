//! Vocabulary tables for the generated corpus and its lexicon.
//!
//! Each entry is `(word, "TAG/count ...")` in the lexicon line format. Counts
//! are rough newswire-frequency magnitudes; several words deliberately carry
//! more than one tag so the category distributions are not all one-hot.

pub const FUNCTION_WORDS: &[(&str, &str)] = &[
    ("the", "DT/69016"),
    ("a", "DT/23073"),
    ("an", "DT/3748"),
    ("this", "DT/5146"),
    ("that", "IN/7000 DT/2300 WDT/1200"),
    ("each", "DT/877"),
    ("every", "DT/491"),
    ("some", "DT/1580"),
    ("its", "PRP$/6300"),
    ("his", "PRP$/6900"),
    ("her", "PRP$/2900 PRP/800"),
    ("their", "PRP$/2670"),
    ("he", "PRP/9500"),
    ("she", "PRP/2860"),
    ("it", "PRP/8750"),
    ("they", "PRP/3620"),
    ("we", "PRP/2650"),
    ("I", "PRP/5100"),
    ("you", "PRP/3280"),
    ("and", "CC/28850"),
    ("but", "CC/4380"),
    ("or", "CC/4200"),
    ("in", "IN/21340"),
    ("on", "IN/6740"),
    ("at", "IN/5370"),
    ("by", "IN/5300"),
    ("for", "IN/9490"),
    ("with", "IN/7290"),
    ("from", "IN/4370"),
    ("to", "TO/26150"),
    ("of", "IN/36410"),
    ("after", "IN/1070"),
    ("before", "IN/830"),
    ("during", "IN/580"),
    ("under", "IN/710"),
    ("over", "IN/600 RP/120"),
    ("about", "IN/1815 RB/300"),
    ("against", "IN/630"),
    ("between", "IN/730"),
    ("through", "IN/700"),
    ("will", "MD/2110"),
    ("would", "MD/2710"),
    ("could", "MD/1600"),
    ("may", "MD/1300"),
    ("must", "MD/1010"),
    ("not", "RB/4610"),
    ("also", "RB/1070"),
    ("still", "RB/780"),
    ("already", "RB/380"),
    ("nearly", "RB/240"),
    ("again", "RB/530"),
    ("later", "RB/300 JJR/50"),
    ("earlier", "RBR/120 JJR/80"),
    ("because", "IN/880"),
    ("while", "IN/680"),
    ("although", "IN/340"),
    ("when", "WRB/2330"),
    ("where", "WRB/940"),
    ("what", "WP/1910"),
    ("who", "WP/2250"),
    ("if", "IN/2200"),
    ("as", "IN/7250"),
    ("too", "RB/830"),
    ("very", "RB/720"),
    ("is", "VBZ/10100"),
    ("was", "VBD/9820"),
    ("were", "VBD/3280"),
    ("are", "VBP/4390"),
    ("be", "VB/6380"),
    ("been", "VBN/2470"),
    ("has", "VBZ/2440"),
    ("have", "VBP/3940"),
    ("had", "VBD/5130"),
    ("said", "VBD/1960 VBN/100"),
    ("say", "VB/500 VBP/300"),
    ("says", "VBZ/420"),
    ("s", "POS/4200"),
];

pub const NOUNS: &[(&str, &str)] = &[
    ("adult", "JJ/2 NN/24"),
    ("company", "NN/620"),
    ("companies", "NNS/380"),
    ("market", "NN/530"),
    ("markets", "NNS/160"),
    ("report", "NN/330 VB/60"),
    ("plan", "NN/350 VB/90"),
    ("price", "NN/280"),
    ("prices", "NNS/300"),
    ("share", "NN/220 VB/30"),
    ("shares", "NNS/410"),
    ("profit", "NN/240"),
    ("profits", "NNS/150"),
    ("group", "NN/390"),
    ("bank", "NN/340"),
    ("banks", "NNS/170"),
    ("deal", "NN/200 VB/40"),
    ("offer", "NN/180 VB/70"),
    ("sale", "NN/170"),
    ("sales", "NNS/310"),
    ("product", "NN/190"),
    ("products", "NNS/160"),
    ("factory", "NN/90"),
    ("worker", "NN/70"),
    ("workers", "NNS/240"),
    ("union", "NN/210"),
    ("board", "NN/310"),
    ("economy", "NN/220"),
    ("industry", "NN/270"),
    ("government", "NN/670"),
    ("agency", "NN/160"),
    ("official", "NN/120 JJ/90"),
    ("officials", "NNS/280"),
    ("statement", "NN/150"),
    ("quarter", "NN/230"),
    ("year", "NN/820"),
    ("years", "NNS/560"),
    ("month", "NN/210"),
    ("months", "NNS/240"),
    ("week", "NN/260"),
    ("weeks", "NNS/170"),
    ("analyst", "NN/90"),
    ("analysts", "NNS/220"),
    ("investor", "NN/60"),
    ("investors", "NNS/250"),
    ("trader", "NN/40"),
    ("traders", "NNS/150"),
    ("contract", "NN/190"),
    ("contracts", "NNS/110"),
    ("order", "NN/140 VB/30"),
    ("orders", "NNS/120"),
    ("rate", "NN/250"),
    ("rates", "NNS/280"),
    ("index", "NN/160"),
    ("fund", "NN/170"),
    ("funds", "NNS/190"),
    ("stock", "NN/360"),
    ("stocks", "NNS/270"),
    ("bond", "NN/110"),
    ("bonds", "NNS/230"),
    ("firm", "NN/230 JJ/30"),
    ("unit", "NN/200"),
    ("units", "NNS/140"),
    ("division", "NN/130"),
    ("venture", "NN/100"),
    ("project", "NN/180"),
    ("program", "NN/270"),
    ("policy", "NN/240"),
    ("budget", "NN/190"),
    ("tax", "NN/250"),
    ("taxes", "NNS/120"),
    ("loan", "NN/120"),
    ("loans", "NNS/140"),
    ("debt", "NN/180"),
    ("assets", "NNS/210"),
    ("revenue", "NN/130"),
    ("loss", "NN/160"),
    ("losses", "NNS/130"),
    ("gain", "NN/90 VB/40"),
    ("gains", "NNS/140"),
    ("growth", "NN/230"),
    ("decline", "NN/100 VB/50"),
    ("increase", "NN/150 VB/80"),
    ("drop", "NN/70 VB/50"),
    ("city", "NN/320"),
    ("state", "NN/410 VB/30"),
    ("country", "NN/290"),
    ("region", "NN/90"),
    ("meeting", "NN/200 VBG/40"),
    ("appointment", "NN/60"),
    ("car", "NN/270"),
    ("cars", "NNS/180"),
    ("road", "NN/160"),
    ("house", "NN/380"),
    ("office", "NN/250"),
    ("building", "NN/140 VBG/60"),
    ("plant", "NN/180 VB/20"),
    ("line", "NN/290"),
    ("lines", "NNS/170"),
    ("figure", "NN/110"),
    ("figures", "NNS/130"),
    ("level", "NN/220"),
    ("levels", "NNS/120"),
    ("result", "NN/130"),
    ("results", "NNS/180"),
    ("effect", "NN/150"),
    ("demand", "NN/170 VB/40"),
    ("supply", "NN/90 VB/20"),
    ("cost", "NN/200 VB/60"),
    ("costs", "NNS/210 VBZ/20"),
    ("estimate", "NN/80 VB/60"),
    ("forecast", "NN/70 VB/40"),
    ("earnings", "NNS/190"),
    ("proposal", "NN/120"),
    ("merger", "NN/90"),
    ("takeover", "NN/50"),
    ("stake", "NN/80"),
    ("dividend", "NN/70"),
    ("bid", "NN/90 VB/30"),
    ("committee", "NN/230"),
    ("member", "NN/140"),
    ("members", "NNS/260"),
    ("leader", "NN/110"),
    ("leaders", "NNS/150"),
    ("spokesman", "NN/130"),
    ("chairman", "NN/240"),
    ("president", "NN/470"),
    ("director", "NN/160"),
    ("directors", "NNS/90"),
    ("manager", "NN/120"),
    ("executive", "NN/100 JJ/60"),
    ("executives", "NNS/110"),
    ("employees", "NNS/160"),
    ("customers", "NNS/140"),
    ("term", "NN/130"),
    ("terms", "NNS/160"),
    ("goal", "NN/90"),
    ("problem", "NN/310"),
    ("question", "NN/280 VB/40"),
    ("answer", "NN/120 VB/50"),
    ("day", "NN/460"),
    ("days", "NNS/380"),
    ("time", "NN/740"),
    ("part", "NN/400"),
    ("way", "NN/520"),
    ("work", "NN/430 VB/160"),
    ("number", "NN/350"),
    ("percent", "NN/420"),
    ("point", "NN/270 VB/30"),
    ("points", "NNS/280 VBZ/20"),
    ("billion", "CD/310"),
    ("million", "CD/540"),
    ("yesterday", "NN/130 RB/60"),
    ("today", "NN/170 RB/90"),
];

pub const VERBS_PAST: &[(&str, &str)] = &[
    ("reported", "VBD/190 VBN/90"),
    ("announced", "VBD/160 VBN/70"),
    ("rose", "VBD/210 NN/45"),
    ("fell", "VBD/230"),
    ("gained", "VBD/90 VBN/30"),
    ("dropped", "VBD/110 VBN/40"),
    ("climbed", "VBD/80"),
    ("declined", "VBD/100 VBN/20"),
    ("increased", "VBD/120 VBN/80"),
    ("decreased", "VBD/40 VBN/20"),
    ("closed", "VBD/130 VBN/60"),
    ("opened", "VBD/110 VBN/40"),
    ("agreed", "VBD/150 VBN/50"),
    ("offered", "VBD/120 VBN/60"),
    ("sold", "VBD/140 VBN/90"),
    ("bought", "VBD/100 VBN/40"),
    ("acquired", "VBD/80 VBN/50"),
    ("approved", "VBD/110 VBN/60"),
    ("rejected", "VBD/90 VBN/40"),
    ("planned", "VBD/70 VBN/60"),
    ("expected", "VBD/60 VBN/180"),
    ("estimated", "VBD/50 VBN/90"),
    ("noted", "VBD/80 VBN/20"),
    ("added", "VBD/130 VBN/30"),
    ("confirmed", "VBD/60 VBN/30"),
    ("denied", "VBD/50 VBN/20"),
    ("launched", "VBD/70 VBN/30"),
    ("completed", "VBD/60 VBN/50"),
    ("signed", "VBD/90 VBN/40"),
    ("posted", "VBD/80 VBN/20"),
    ("earned", "VBD/60 VBN/30"),
    ("reached", "VBD/120 VBN/40"),
    ("cut", "VB/90 VBD/70 VBN/60 NN/50"),
    ("raised", "VBD/100 VBN/40"),
    ("lowered", "VBD/40 VBN/20"),
    ("traded", "VBD/60 VBN/30"),
    ("ended", "VBD/90 VBN/40"),
    ("began", "VBD/170"),
    ("continued", "VBD/110 VBN/40"),
    ("remained", "VBD/90"),
    ("became", "VBD/180"),
    ("told", "VBD/240 VBN/60"),
    ("warned", "VBD/70 VBN/20"),
    ("predicted", "VBD/50 VBN/30"),
    ("showed", "VBD/110"),
    ("made", "VBD/280 VBN/190"),
    ("took", "VBD/230"),
    ("won", "VBD/90 VBN/40"),
    ("lost", "VBD/110 VBN/50"),
    ("paid", "VBD/90 VBN/70"),
    ("held", "VBD/120 VBN/80"),
    ("met", "VBD/90 VBN/30"),
    ("moved", "VBD/100 VBN/30"),
    ("grew", "VBD/70"),
    ("named", "VBD/80 VBN/60"),
    ("included", "VBD/90 VBN/70"),
    ("fixed", "VBD/30 VBN/60 JJ/40"),
];

pub const VERBS_BASE: &[(&str, &str)] = &[
    ("sell", "VB/120"),
    ("buy", "VB/140"),
    ("approve", "VB/50"),
    ("reject", "VB/40"),
    ("sign", "VB/60 NN/40"),
    ("raise", "VB/70 NN/20"),
    ("meet", "VB/100"),
    ("open", "VB/90 JJ/150"),
    ("close", "VB/60 JJ/70 RB/30"),
    ("rise", "VB/80 NN/60"),
    ("fall", "VB/70 NN/50"),
    ("grow", "VB/60"),
    ("expand", "VB/40"),
    ("announce", "VB/30"),
    ("expect", "VB/90 VBP/60"),
    ("continue", "VB/80"),
    ("remain", "VB/60"),
    ("pay", "VB/110 NN/30"),
    ("get", "VB/340"),
    ("go", "VB/290"),
    ("make", "VB/310"),
    ("take", "VB/300"),
    ("see", "VB/230"),
];

pub const ADJECTIVES: &[(&str, &str)] = &[
    ("new", "JJ/1630"),
    ("big", "JJ/360"),
    ("small", "JJ/510"),
    ("large", "JJ/700"),
    ("major", "JJ/250"),
    ("strong", "JJ/390"),
    ("weak", "JJ/130"),
    ("high", "JJ/570 RB/60"),
    ("low", "JJ/470 RB/40"),
    ("early", "JJ/390 RB/170"),
    ("late", "JJ/180 RB/60"),
    ("recent", "JJ/240"),
    ("annual", "JJ/170"),
    ("quarterly", "JJ/60"),
    ("federal", "JJ/330"),
    ("national", "JJ/480"),
    ("foreign", "JJ/210"),
    ("domestic", "JJ/90"),
    ("chief", "JJ/160 NN/60"),
    ("senior", "JJ/90"),
    ("former", "JJ/310"),
    ("current", "JJ/120"),
    ("net", "JJ/110 NN/40"),
    ("total", "JJ/140 NN/70 VB/20"),
    ("fiscal", "JJ/80"),
    ("financial", "JJ/230"),
    ("industrial", "JJ/160"),
    ("commercial", "JJ/110"),
    ("third", "JJ/190"),
    ("second", "JJ/280 NN/40"),
    ("first", "JJ/660 RB/90"),
    ("sharp", "JJ/80"),
    ("modest", "JJ/50"),
    ("long", "JJ/490 RB/130"),
    ("short", "JJ/230 RB/40"),
    ("good", "JJ/690"),
    ("bad", "JJ/150"),
    ("free", "JJ/240"),
    ("public", "JJ/380 NN/90"),
    ("private", "JJ/190"),
    ("extraordinary", "JJ/40"),
    ("final", "JJ/160"),
    ("due", "JJ/140"),
];

pub const ADVERBS: &[(&str, &str)] = &[
    ("sharply", "RB/70"),
    ("slightly", "RB/90"),
    ("quickly", "RB/110"),
    ("slowly", "RB/60"),
    ("recently", "RB/130"),
];

pub const DAYS: &[(&str, &str)] = &[
    ("Monday", "NNP/110"),
    ("Tuesday", "NNP/100"),
    ("Wednesday", "NNP/90"),
    ("Thursday", "NNP/95"),
    ("Friday", "NNP/120"),
    ("Saturday", "NNP/130"),
    ("Sunday", "NNP/140"),
];

pub const MONTHS: &[(&str, &str)] = &[
    ("January", "NNP/90"),
    ("February", "NNP/70"),
    ("March", "NNP/120 NN/20"),
    ("April", "NNP/80"),
    ("May", "NNP/90"),
    ("June", "NNP/85"),
    ("July", "NNP/80"),
    ("August", "NNP/75"),
    ("September", "NNP/85"),
    ("October", "NNP/90"),
    ("November", "NNP/85"),
    ("December", "NNP/95"),
];

pub const MONTH_ABBREVS: &[(&str, &str)] = &[
    ("Jan", "ABBR/60 NNP/8"),
    ("Feb", "ABBR/45 NNP/5"),
    ("Mar", "ABBR/40 NNP/5"),
    ("Apr", "ABBR/35 NNP/4"),
    ("Aug", "ABBR/45 NNP/5"),
    ("Sept", "ABBR/35 NNP/4"),
    ("Oct", "ABBR/55 NNP/6"),
    ("Nov", "ABBR/50 NNP/5"),
    ("Dec", "ABBR/55 NNP/6"),
];

pub const HONORIFICS: &[(&str, &str)] = &[
    ("Mr", "ABBR/3300 NNP/60"),
    ("Mrs", "ABBR/520 NNP/12"),
    ("Ms", "ABBR/130 NNP/6"),
    ("Dr", "ABBR/330 NNP/40"),
    ("Prof", "ABBR/28 NNP/2"),
    ("Gen", "ABBR/70 NNP/4"),
    ("Col", "ABBR/48 NNP/3"),
    ("Sen", "ABBR/95 NNP/5"),
    ("Rep", "ABBR/88 NNP/5"),
    ("Gov", "ABBR/72 NNP/4"),
    ("Capt", "ABBR/33 NNP/2"),
    ("Lt", "ABBR/25 NNP/2"),
];

pub const NAME_SUFFIXES: &[(&str, &str)] = &[
    ("Jr", "ABBR/140 NNP/10"),
    ("Sr", "ABBR/60 NNP/5"),
];

pub const CORP_SUFFIXES: &[(&str, &str)] = &[
    ("Inc", "ABBR/940 NNP/35"),
    ("Corp", "ABBR/720 NNP/28"),
    ("Co", "ABBR/610 NNP/24"),
    ("Ltd", "ABBR/160 NNP/9"),
];

pub const KNOWN_SURNAMES: &[(&str, &str)] = &[
    ("Smith", "NNP/120"),
    ("Johnson", "NNP/90"),
    ("Brown", "NNP/100 JJ/120 NN/30"),
    ("Davis", "NNP/80"),
    ("Miller", "NNP/85 NN/15"),
    ("Wilson", "NNP/88"),
    ("Moore", "NNP/70"),
    ("Taylor", "NNP/75 NN/10"),
    ("Anderson", "NNP/65"),
    ("Thomas", "NNP/95"),
    ("Jackson", "NNP/72"),
    ("White", "NNP/60 JJ/310"),
    ("Harris", "NNP/58"),
    ("Martin", "NNP/66"),
    ("Thompson", "NNP/55"),
    ("Clark", "NNP/62"),
    ("Lewis", "NNP/64"),
    ("Walker", "NNP/52 NN/8"),
    ("Hall", "NNP/60 NN/90"),
    ("Allen", "NNP/57"),
    ("Young", "NNP/63 JJ/280"),
    ("King", "NNP/61 NN/70"),
    ("Ford", "NNP/94"),
    ("Carter", "NNP/59"),
    ("Hughes", "NNP/48"),
];

/// Surnames deliberately left out of the lexicon, so the unknown-capitalized
/// heuristic gets exercised at scale.
pub const UNKNOWN_SURNAMES: &[&str] = &[
    "Rowland", "Pickens", "Calloway", "Dorset", "Fenwick", "Whitaker", "Prescott", "Langford",
    "Merritt", "Ashcroft", "Delgado", "Navarro", "Okafor", "Lindqvist", "Moravec", "Ostrowski",
    "Vance", "Holbrook", "Sutter", "Radcliffe", "Pemberton", "Kowalski", "Braddock", "Yates",
];

pub const KNOWN_FIRST_NAMES: &[(&str, &str)] = &[
    ("John", "NNP/130"),
    ("Mary", "NNP/80"),
    ("Robert", "NNP/95"),
    ("David", "NNP/90"),
    ("Susan", "NNP/60"),
    ("Peter", "NNP/70"),
    ("Ellen", "NNP/40"),
    ("Henry", "NNP/75"),
    ("Laura", "NNP/45"),
    ("James", "NNP/110"),
];

pub const UNKNOWN_FIRST_NAMES: &[&str] = &[
    "Marcus", "Delia", "Rosalind", "Tobias", "Imogen", "Caspar", "Verity", "Leander",
];

pub const KNOWN_COMPANY_WORDS: &[(&str, &str)] = &[
    ("Global", "JJ/80 NNP/20"),
    ("General", "JJ/210 NNP/90"),
    ("National", "JJ/480 NNP/110"),
    ("United", "VBN/90 NNP/150 JJ/40"),
    ("Northern", "JJ/70 NNP/40"),
    ("Pacific", "NNP/80 JJ/50"),
    ("Continental", "JJ/40"),
    ("American", "JJ/260 NNP/120"),
    ("Western", "JJ/90 NNP/50"),
    ("Standard", "JJ/70 NN/60 NNP/30"),
];

pub const UNKNOWN_COMPANY_WORDS: &[&str] = &[
    "Apex", "Vertex", "Pinnacle", "Acme", "Hartman", "Brampton", "Nordview", "Solara", "Tellus",
    "Veltron", "Quorium", "Ridgeline",
];

pub const KNOWN_PLACES: &[(&str, &str)] = &[
    ("Washington", "NNP/150"),
    ("Chicago", "NNP/90"),
    ("Boston", "NNP/70"),
    ("Dallas", "NNP/55"),
    ("Denver", "NNP/50"),
    ("Atlanta", "NNP/60"),
    ("Japan", "NNP/120"),
    ("Germany", "NNP/90"),
    ("France", "NNP/85"),
    ("Britain", "NNP/80"),
    ("Canada", "NNP/75"),
    ("Mexico", "NNP/65"),
    ("China", "NNP/95"),
];

pub const UNKNOWN_PLACES: &[&str] = &["Marlow", "Kentfield", "Bryceton", "Eastvale", "Corwin"];

/// Singular nouns the sentence generator may pick (a subset of the lexicon).
pub const GEN_NOUNS_SING: &[&str] = &[
    "company", "market", "report", "plan", "price", "share", "profit", "group", "bank", "deal",
    "offer", "sale", "product", "factory", "worker", "union", "board", "economy", "industry",
    "government", "agency", "official", "statement", "quarter", "year", "month", "week",
    "analyst", "investor", "trader", "contract", "order", "rate", "index", "fund", "stock",
    "bond", "firm", "unit", "division", "venture", "project", "program", "policy", "budget",
    "tax", "loan", "debt", "revenue", "loss", "gain", "growth", "decline", "increase", "drop",
    "city", "state", "country", "region", "meeting", "appointment", "car", "road", "house",
    "office", "building", "plant", "line", "figure", "level", "result", "effect", "demand",
    "supply", "cost", "estimate", "forecast", "proposal", "merger", "takeover", "stake",
    "dividend", "bid", "committee", "member", "leader", "spokesman", "chairman", "president",
    "director", "manager", "executive", "term", "goal", "problem", "question", "answer",
    "number", "point",
];

/// Plural nouns the sentence generator may pick.
pub const GEN_NOUNS_PLUR: &[&str] = &[
    "companies", "markets", "prices", "shares", "profits", "banks", "sales", "products",
    "workers", "officials", "years", "months", "weeks", "analysts", "investors", "traders",
    "contracts", "orders", "rates", "funds", "stocks", "bonds", "units", "taxes", "loans",
    "assets", "losses", "gains", "cars", "lines", "figures", "levels", "results", "costs",
    "earnings", "members", "leaders", "directors", "executives", "employees", "customers",
    "terms", "days", "points",
];

/// Everything that goes into the lexicon file.
pub fn lexicon_tables() -> Vec<&'static [(&'static str, &'static str)]> {
    vec![
        FUNCTION_WORDS,
        NOUNS,
        VERBS_PAST,
        VERBS_BASE,
        ADJECTIVES,
        ADVERBS,
        DAYS,
        MONTHS,
        MONTH_ABBREVS,
        HONORIFICS,
        NAME_SUFFIXES,
        CORP_SUFFIXES,
        KNOWN_SURNAMES,
        KNOWN_FIRST_NAMES,
        KNOWN_COMPANY_WORDS,
        KNOWN_PLACES,
    ]
}
