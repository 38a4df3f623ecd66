#!/usr/bin/env python3
"""Regenerate the bundled data files and test fixtures.

Everything under src/lexgender/data/ and tests/data/ is produced by this
script so the content lives in one reviewable place:

- gold.tsv                the gold noun list
- wndb/                   miniature WordNet-style noun database (WNDB format)
- snapshots/*.json        frozen definition snapshots for the three sources
- toy_tagged.tsv          small POS-tagged corpus
- tests/data/grid20_*     synthetic fixture for grid-search soundness tests

The WordNet snapshot is captured from the generated WNDB files through the
regular provider/snapshot machinery; the other two snapshots are captured
from the in-memory definition tables below.

Definition texts are editorial content for this repository: short,
dictionary-style noun definitions in each source's voice, fixed here so
evaluation runs are reproducible offline.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from lexgender.core import default_lexicon  # noqa: E402
from lexgender.providers import WordNetProvider, snapshot_write  # noqa: E402

DATA = REPO / "src" / "lexgender" / "data"
TESTS_DATA = REPO / "tests" / "data"


# ---------------------------------------------------------------------------
# Gold standard: 134 entries (53 masc, 53 fem, 28 neut).
# One row per pairing, so a word paired twice (e.g. dad with both mum and
# mom) legitimately appears twice.
# ---------------------------------------------------------------------------

GOLD_ROWS = [
    # category, masculine, feminine, neutral ("" = no entry in that column)
    ("family", "brother", "sister", "sibling"),
    ("family", "dad", "mum", ""),
    ("family", "dad", "mom", ""),
    ("family", "daddy", "mummy", ""),
    ("family", "daddy", "mommy", ""),
    ("family", "father", "mother", "parent"),
    ("family", "father-in-law", "mother-in-law", "parent-in-law"),
    ("family", "fiance", "fiancee", "betrothed"),
    ("family", "grandfather", "grandmother", "grandparent"),
    ("family", "grandson", "granddaughter", "grandchild"),
    ("family", "husband", "wife", "spouse"),
    ("family", "nephew", "niece", ""),
    ("family", "son", "daughter", "child"),
    ("family", "son-in-law", "daughter-in-law", "child-in-law"),
    ("family", "step-father", "step-mother", "step-parent"),
    ("family", "stepfather", "stepmother", "stepparent"),
    ("family", "uncle", "aunt", ""),
    ("family", "widower", "widow", ""),
    ("misc", "bachelor", "spinster", "single person"),
    ("misc", "boy", "girl", "child"),
    ("misc", "boyfriend", "girlfriend", "partner"),
    ("misc", "gentleman", "lady", ""),
    ("misc", "groom", "bride", ""),
    ("misc", "lad", "lass", ""),
    ("misc", "male", "female", ""),
    ("misc", "man", "woman", "person"),
    ("misc", "manservant", "maidservant", "servant"),
    ("misc", "steward", "stewardess", "attendant"),
    ("misc", "swain", "nymph", "spirit"),
    ("misc", "wizard", "witch", ""),
    ("occupation", "businessman", "businesswoman", "business person"),
    ("occupation", "chairman", "chairwoman", "chairperson"),
    ("occupation", "fireman", "firewoman", "fire fighter"),
    ("occupation", "headmaster", "headmistress", "head teacher"),
    ("occupation", "landlord", "landlady", "renter"),
    ("occupation", "milkman", "milkmaid", ""),
    ("occupation", "policeman", "policewoman", "police officer"),
    ("occupation", "salesman", "saleswoman", "salesperson"),
    ("occupation", "waiter", "waitress", "server"),
    ("religion", "friar", "nun", ""),
    ("religion", "monk", "nun", ""),
    ("title", "mr.", "mrs.", "mx."),
    ("title", "baron", "baroness", ""),
    ("title", "count", "countess", ""),
    ("title", "czar", "czarina", ""),
    ("title", "duke", "duchess", ""),
    ("title", "earl", "countess", ""),
    ("title", "emperor", "empress", "ruler"),
    ("title", "king", "queen", ""),
    ("title", "prince", "princess", ""),
    ("title", "signor", "signora", ""),
    ("title", "sir", "madam", ""),
    ("title", "viscount", "viscountess", ""),
]


def gold_entries() -> list[tuple[str, str, str]]:
    entries = []
    for category, masc, fem, neut in GOLD_ROWS:
        entries.append((masc, "masc", category))
        entries.append((fem, "fem", category))
        if neut:
            entries.append((neut, "neut", category))
    return entries


# ---------------------------------------------------------------------------
# WordNet-style glosses (lemma -> ordered senses). Multiword lemmas use
# spaces here and are stored with underscores in the database files.
# ---------------------------------------------------------------------------

WORDNET = {
    "aunt": ["the sister of your father or mother; the wife of your uncle"],
    "bachelor": [
        "a man who has never been married",
        "a knight of the lowest order; could display only a pennon",
    ],
    "baron": [
        "a British peer of the lowest rank",
        'a very wealthy or powerful businessman; "an oil baron"',
    ],
    "baroness": ["a noblewoman who holds the title of baron or who is the wife or widow of a baron"],
    "betrothed": ["the person to whom you are engaged"],
    "boy": ["a youthful male person"],
    "boyfriend": [
        "a man who is the lover of a girl or young woman; \"if I'd known he was her boyfriend I wouldn't have asked\"",
    ],
    "bride": ["a woman who has recently been married or is about to be married"],
    "brother": ["a male with the same parents as someone else"],
    "businessman": [
        "a person engaged in commercial or industrial business (especially an owner or executive)",
    ],
    "businessperson": ["a capitalist who engages in industrial commercial enterprise"],
    "businesswoman": ["a female businessperson"],
    "chairman": ['the officer who presides at the meetings of an organization; "address your remarks to the chairman"'],
    "chairperson": ["the officer who presides at the meetings of an organization"],
    "chairwoman": ["a woman chairperson"],
    "child": [
        "a young person of either sex",
        "a human offspring (son or daughter) of any age",
        "an immature childish person",
        "a member of a clan or tribe",
    ],
    "count": ["a nobleman (in various countries) having rank equal to a British earl"],
    "countess": ["female equivalent of a count or earl"],
    "crew": [
        "the men and women who man a vehicle (ship, aircraft, etc.)",
        "an organized group of workmen",
        'an informal body of friends; "he still hangs out with the same crew"',
        "the team of men manning a racing shell",
    ],
    "czar": [
        "a male monarch or emperor (especially of Russia prior to 1917)",
        "a person having great power",
    ],
    "czarina": ["the wife or widow of a czar"],
    "dad": ["an informal term for a father; probably derived from baby talk"],
    "daddy": ["an informal term for a father; probably derived from baby talk"],
    "daughter": ["a female human offspring"],
    "daughter-in-law": ["the wife of your son"],
    "duchess": ["the wife of a duke or a woman holding ducal title in her own right"],
    "duke": ["a British peer of the highest rank"],
    "earl": ["a British peer ranking below a marquess and above a viscount"],
    "emperor": ['the male sovereign or supreme ruler of an empire; "the emperors of Rome"'],
    "empress": ["a woman emperor or the wife of an emperor"],
    "father": ["a male parent (also used as a term of address to your father)"],
    "father-in-law": ["the father of your spouse"],
    "female": ["a person who belongs to the sex that can have babies"],
    "fiance": ["a man who is engaged to be married"],
    "fiancee": ["a woman who is engaged to be married"],
    "fire fighter": ["a member of a fire department who tries to extinguish fires"],
    "fireman": ["a member of a fire department who tries to extinguish fires"],
    "friar": ["a member of a mendicant order"],
    "gentleman": ["a man of refinement"],
    "girl": ["a youthful female person"],
    "girlfriend": [
        'any female friend; "Mary and her girlfriend organized the party"',
        "a girl or young woman with whom a man is romantically involved",
    ],
    "granddaughter": ["a female grandchild"],
    "grandchild": ["a child of your son or daughter"],
    "grandfather": ["the father of your father or mother"],
    "grandmother": ["the mother of your father or mother"],
    "grandparent": ["a parent of your father or mother"],
    "grandson": ["a male grandchild"],
    "groom": [
        "a man participant in his own marriage ceremony",
        "someone employed in a stable to take care of the horses",
    ],
    "head teacher": ['the educator who has executive authority for a school; "she sent unruly pupils to see the head teacher"'],
    "headmaster": ["presiding officer of a school"],
    "headmistress": ["a woman headmaster"],
    "human": [
        "any living or extinct member of the family Hominidae characterized by superior intelligence, articulate speech, and erect carriage",
    ],
    "husband": ["a married man; a woman's partner in marriage"],
    "king": [
        "a male sovereign; ruler of a kingdom",
        "a competitor who holds a preeminent position",
    ],
    "lad": [
        "a boy or man; \"that lad is a fine worker\"",
        "an awkward and inexperienced youth",
    ],
    "landlady": ["a landlord who is a woman"],
    "landlord": ["a landowner who leases to others"],
    "lady": ["a polite name for any woman"],
    "lass": ["a girl or young woman who is unmarried"],
    "madam": [
        'a woman of refinement; "a chauffeur opened the door of the limousine for the grand lady"',
        "a woman who runs a house of prostitution",
    ],
    "maidservant": ["a female servant"],
    "male": ["a person who belongs to the sex that cannot have babies"],
    "man": ["an adult person who is male (as opposed to a woman)"],
    "manservant": ["a man servant"],
    "milkmaid": ["a woman who works in a dairy"],
    "milkman": ["someone who delivers milk"],
    "mom": ["informal terms for a mother"],
    "mommy": ["informal terms for a mother"],
    "monk": ["a man who is a member of a religious order and lives in a monastery"],
    "mother": ["a woman who has given birth to a child (also used as a term of address to your mother)"],
    "mother-in-law": ["the mother of your spouse"],
    "mum": [
        "informal terms for a mother",
        "any of various plants of the genus Chrysanthemum cultivated for their showy flowers",
    ],
    "mummy": [
        "informal terms for a mother",
        "a body embalmed and dried and wrapped for burial (as in ancient Egypt)",
    ],
    "nephew": ["a son of your brother or sister"],
    "niece": ["a daughter of your brother or sister"],
    "nun": ["a woman belonging to a religious order"],
    "nymph": [
        'a minor nature goddess usually depicted as a beautiful maiden; "the ancient Greeks believed that nymphs inhabited forests and bodies of water"',
    ],
    "partner": [
        "a person who is a member of a partnership",
        "an associate in an activity or endeavor or sphere of common interest",
    ],
    "people": ["(plural) any group of human beings (men or women or children) collectively"],
    "person": ['a human being; "there was too much for one person to do"'],
    "police officer": ['a member of a police force; "it was an accident, officer"'],
    "policeman": ["a member of a police force"],
    "policewoman": ["a woman policeman"],
    "prince": ["a male member of a royal family other than the sovereign (especially the son of a sovereign)"],
    "princess": ["a female member of a royal family other than the queen (especially the daughter of a sovereign)"],
    "queen": [
        "the only fertile female in a colony of social insects such as bees and ants and termites; its function is to lay eggs",
        "a female sovereign; ruler of a kingdom",
        "something personified as a woman who is considered the best or most important of her kind",
    ],
    "renter": ["someone who pays rent to use land or a building or a car that is owned by someone else"],
    "ruler": [
        'a person who rules or commands; "swift\'s schoolboy satire on rulers and ruled"',
        "measuring stick consisting of a strip of wood or metal or plastic with a straight edge that is used for drawing straight lines and measuring lengths",
    ],
    "salesman": ["a man salesperson"],
    "salesperson": [
        "a person employed to represent a business and to sell its merchandise (as to customers in a store or to customers who are visited)",
    ],
    "saleswoman": ["a woman salesperson"],
    "servant": ["a person working in the service of another (especially in the household)"],
    "server": [
        "a person whose occupation is to serve at table (as in a restaurant)",
        "(court games) the player who serves to start a point",
    ],
    "sibling": ["a person's brother or sister"],
    "signor": ["used as an Italian courtesy title; can be prefixed to the name or used separately"],
    "signora": ["an Italian title of address equivalent to Mrs. when used before a name"],
    "sir": [
        'term of address for a man; "Sir, may I help you?"',
        "a title used before the name of knight or baronet",
    ],
    "sister": ["a female person who has the same parents as another person"],
    "son": ["a male human offspring"],
    "son-in-law": ["the husband of your daughter"],
    "soprano": [
        "a female singer",
        "the highest female voice; the voice of a boy before puberty",
    ],
    "spinster": ["an elderly unmarried woman"],
    "spirit": ["the vital principle or animating force within living things"],
    "spouse": ["a person's partner in marriage"],
    "steward": [
        "someone who manages property or other affairs for someone else",
        "the ship's officer who is in charge of provisions and dining arrangements",
        "an attendant on an airplane",
    ],
    "stewardess": ["a woman steward on an airplane"],
    "stepfather": ["the husband of your mother by a subsequent marriage"],
    "stepmother": ["the wife of your father by a subsequent marriage"],
    "stepparent": ["the spouse of your parent by a later marriage"],
    "step-parent": ["the spouse of your parent by a later marriage"],
    "swain": ["a man who is the lover of a girl or young woman"],
    "table": [
        'a set of data arranged in rows and columns; "see table 1"',
        'a piece of furniture having a smooth flat top that is usually supported by one or more vertical legs; "it was a sturdy table"',
    ],
    "uncle": ["the brother of your mother or father; the husband of your aunt"],
    "viscount": ["a British peer who ranks below an earl and above a baron"],
    "viscountess": [
        "a noblewoman holding the rank of viscount in her own right",
        "the wife or widow of a viscount",
    ],
    "waiter": ["a person whose occupation is to serve at table (as in a restaurant)"],
    "waitress": ["a woman waiter"],
    "widow": ["a woman whose husband is dead especially one who has not remarried"],
    "widower": ["a man whose wife is dead especially one who has not remarried"],
    "wife": ["a married woman; a man's partner in marriage"],
    "witch": [
        "a female sorcerer or magician",
        "a being (usually female) imagined to have special powers derived from the devil",
    ],
    "wizard": [
        "one who practices magic or sorcery",
        "someone who is dazzlingly skilled in any field",
    ],
    "woman": ["an adult female person (as opposed to a man)"],
}


# ---------------------------------------------------------------------------
# Merriam-Webster-style definitions.
# ---------------------------------------------------------------------------

MERRIAM_WEBSTER = {
    "aunt": ["the sister of one's father or mother"],
    "bachelor": ["an unmarried man", "a person who holds a bachelor's degree"],
    "baron": ["a member of the lowest grade of the British peerage"],
    "baroness": [
        "the wife or widow of a baron",
        "a woman holding a baronial title in her own right",
    ],
    "betrothed": ["the person to whom one is betrothed"],
    "boy": ["a male child from birth to adulthood"],
    "boyfriend": [
        "a male friend",
        "a frequent or regular male companion in a romantic or sexual relationship",
    ],
    "bride": ["a woman just married or about to be married"],
    "brother": ["a male who has the same parents as another or one parent in common with another"],
    "businessman": ["a man who transacts business; especially : a business executive"],
    "businessperson": ["a businessman or businesswoman"],
    "businesswoman": ["a woman who transacts business; especially : a business executive"],
    "chairman": ["the presiding officer of a meeting, organization, committee, or event"],
    "chairperson": ["the presiding officer of a meeting, organization, committee, or event"],
    "chairwoman": ["a woman who serves as chairman"],
    "child": [
        "a young person especially between infancy and puberty",
        "a son or daughter of human parents",
    ],
    "count": ["a European nobleman whose rank corresponds to that of a British earl"],
    "countess": [
        "the wife or widow of a count or an earl",
        "a woman who holds in her own right the rank of count or earl",
    ],
    "crew": [
        "a group of people associated together in a common activity or by common traits or interests",
        "the whole company belonging to a ship sometimes including the officers and master",
    ],
    "czar": [
        "emperor; specifically : the ruler of Russia until the 1917 revolution",
        "one having great power or authority",
    ],
    "czarina": ["the wife of a czar", "a woman who has the rank of czar"],
    "dad": ["father"],
    "daddy": ["father"],
    "daughter": ["a human female offspring"],
    "daughter-in-law": ["the wife of one's son or daughter"],
    "duchess": [
        "the wife or widow of a duke",
        "a woman who holds in her own right the title of duke",
    ],
    "duke": [
        "a sovereign male ruler of a continental European duchy",
        "a nobleman of the highest hereditary rank",
    ],
    "earl": ["a member of the British peerage ranking below a marquess and above a viscount"],
    "emperor": ["the sovereign or supreme male monarch of an empire"],
    "empress": [
        "the wife or widow of an emperor",
        "a woman who is the sovereign or supreme monarch of an empire",
    ],
    "father": ["a male parent"],
    "father-in-law": ["the father of one's spouse"],
    "female": ["a female person : a woman or a girl"],
    "fiance": ["a man engaged to be married"],
    "fiancee": ["a woman engaged to be married"],
    "fire fighter": ["a person whose job is to put out fires that are burning out of control : firefighter"],
    "fireman": ["a member of a company organized to fight fires"],
    "friar": ["a member of a mendicant order"],
    "gentleman": ["a man of noble or gentle birth"],
    "girl": ["a female child from birth to adulthood"],
    "girlfriend": [
        "a female friend",
        "a frequent or regular female companion in a romantic or sexual relationship",
    ],
    "granddaughter": ["the daughter of one's son or daughter"],
    "grandchild": ["a child of one's son or daughter"],
    "grandfather": ["the father of one's father or mother"],
    "grandmother": ["the mother of one's father or mother"],
    "grandparent": ["a parent of one's father or mother"],
    "grandson": ["the son of one's son or daughter"],
    "groom": [
        "a man who has recently been married or is about to be married : bridegroom",
        "a person responsible for the feeding and care of horses",
    ],
    "head teacher": ["chiefly British : headmaster, headmistress"],
    "headmaster": ["a man heading the staff of a private school"],
    "headmistress": ["a woman heading the staff of a private school"],
    "human": ["a bipedal primate mammal (Homo sapiens) : a person : human being"],
    "husband": ["a male partner in a marriage"],
    "king": [
        "a male monarch of a major territorial unit; especially : one whose position is hereditary and who rules for life",
    ],
    "lad": ["a male person of any age between early boyhood and maturity : boy, youth"],
    "lady": [
        "a woman having proprietary rights or authority especially as a feudal superior",
        "a woman of refinement and gentle manners",
    ],
    "landlady": ["a woman who is a landlord"],
    "landlord": [
        "the owner of property (such as land, houses, or apartments) that is leased or rented to another",
        "an innkeeper",
    ],
    "lass": ["a young woman : girl"],
    "madam": ["lady —used without a name as a form of respectful or polite address to a woman"],
    "maidservant": ["a female servant"],
    "male": ["a male person : a man or a boy"],
    "man": ["an individual human; especially : an adult male human"],
    "manservant": ["a male servant"],
    "milkmaid": ["a girl or woman who works in a dairy"],
    "milkman": ["a person who sells or delivers milk"],
    "mom": ["a female parent : mother"],
    "mommy": ["mother"],
    "monk": ["a man who is a member of a religious order and lives in a monastery"],
    "mother": ["a female parent"],
    "mother-in-law": ["the mother of one's spouse"],
    "mr.": [
        "—used as a conventional title of courtesy except when usage requires the substitution of a title of rank or an honorific or professional title before a man's surname",
    ],
    "mrs.": ["—used as a conventional title of courtesy before a married woman's surname"],
    "mum": ["chiefly British : mother", "a plant or flower of the genus Chrysanthemum"],
    "mummy": [
        "a body embalmed or treated for burial with preservatives in the manner of the ancient Egyptians",
        "chiefly British : mommy",
    ],
    "mx.": ["—used as a gender-neutral courtesy title before a person's surname"],
    "nephew": ["a son of one's brother or sister"],
    "niece": ["a daughter of one's brother or sister"],
    "nun": [
        "a woman belonging to a religious order",
        "a pigeon with a crest of feathers on the head",
    ],
    "nuns": [
        "a woman belonging to a religious order",
        "a pigeon with a crest of feathers on the head",
    ],
    "nymph": [
        "any of the minor divinities of nature in classical mythology represented as beautiful maidens dwelling in the mountains, forests, trees, and waters",
    ],
    "parent": [
        "one that begets or brings forth offspring",
        "a person who brings up and cares for another",
    ],
    "parent-in-law": ["the father or mother of one's spouse"],
    "partner": ["one associated with another especially in an action : associate, colleague"],
    "people": ["human beings making up a group or assembly or linked by a common interest"],
    "person": ["human, individual"],
    "police officer": ["a member of a police force"],
    "policeman": ["a member of a police force"],
    "policewoman": ["a woman who is a police officer"],
    "prince": ["a male member of a royal family; especially : a son of the sovereign"],
    "princess": [
        "a female member of a royal family; especially : a daughter or granddaughter of a sovereign",
    ],
    "queen": ["the wife or widow of a king", "a female monarch"],
    "renter": ["one that rents; specifically : tenant"],
    "ruler": [
        "one that rules; specifically : sovereign",
        "a smooth-edged strip (as of wood or metal) that is usually marked off in units (such as inches) and is used as a straightedge or for measuring",
    ],
    "salesman": ["one who sells either in a given territory, in a store, or by telephone"],
    "salesperson": ["a person whose job is to sell a product or service"],
    "saleswoman": ["a woman who sells goods or services"],
    "servant": ["one that serves others; especially : a person employed by another to perform household duties"],
    "server": ["one that serves food or drink", "the player who puts a ball in play"],
    "sibling": ["one of two or more individuals having one common parent"],
    "signor": ["—used as a conventional title of courtesy before an Italian man's surname"],
    "signora": ["a married Italian woman —used as a title equivalent to Mrs."],
    "sir": [
        "a man entitled to be addressed as sir —used as a title before the given name of a knight or baronet",
    ],
    "sister": ["a female who has one or both parents in common with another"],
    "son": ["a human male offspring"],
    "son-in-law": ["the husband of one's daughter or son"],
    "soprano": [
        "the highest singing voice of women, boys, or castrati",
        "a singer with a soprano voice",
    ],
    "spinster": ["an unmarried woman and especially one past the common age for marrying"],
    "spirit": ["an animating or vital principle held to give life to physical organisms"],
    "spouse": ["married person : husband, wife"],
    "steward": [
        "one employed in a large household or estate to manage domestic concerns (such as the supervision of servants, collection of rents, and keeping of accounts)",
        "one who actively directs affairs : manager",
    ],
    "stewardess": [
        "a woman who performs the duties of a steward; especially : one who attends passengers (as on an airplane)",
    ],
    "stepfather": ["the husband of one's parent when distinct from one's natural or legal father"],
    "stepmother": ["the wife of one's parent when distinct from one's natural or legal mother"],
    "stepparent": ["the husband or wife of one's parent by a subsequent marriage"],
    "attendant": ["one who attends another to perform a service"],
    "swain": ["a male admirer or suitor", "a country lad"],
    "table": [
        "a piece of furniture consisting of a smooth flat slab fixed on legs",
        "a systematic arrangement of data usually in rows and columns for ready reference",
    ],
    "uncle": ["the brother of one's father or mother"],
    "viscount": ["a member of the British peerage ranking below an earl and above a baron"],
    "viscountess": [
        "the wife or widow of a viscount",
        "a woman who holds in her own right the rank of viscount",
    ],
    "waiter": ["one that waits on another; especially : a person who waits tables (as in a restaurant)"],
    "waitress": ["a woman who waits tables (as in a restaurant)"],
    "widow": ["a woman who has lost her spouse by death and usually has not remarried"],
    "widower": ["a man who has lost his spouse by death and usually has not remarried"],
    "wife": ["a female partner in a marriage"],
    "witch": [
        "one that is credited with usually malignant supernatural powers; especially : a woman practicing usually black witchcraft often with the aid of a devil or familiar",
    ],
    "wizard": ["one skilled in magic : sorcerer", "a very clever or skillful person"],
    "woman": ["an adult female person"],
}


# ---------------------------------------------------------------------------
# Dictionary.com-style definitions.
# ---------------------------------------------------------------------------

DICTIONARY_COM = {
    "aunt": ["a sister of one's father or mother"],
    "bachelor": ["an unmarried man of marriageable age"],
    "baron": [
        "a member of the lowest grade of nobility",
        "a powerful and influential person in some field of activity",
    ],
    "baroness": [
        "the wife of a baron",
        "a woman holding a baronial title in her own right",
    ],
    "betrothed": ["the person to whom one is engaged"],
    "boy": ["a male child, from birth to full growth"],
    "boyfriend": ["a frequent or favorite male companion; beau"],
    "bride": ["a newly married woman or a woman about to be married"],
    "brother": ["a male offspring having both parents in common with another offspring; a male sibling"],
    "businessman": ["a man regularly employed in business, especially a white-collar worker, executive, or owner"],
    "businessperson": ["a person engaged in business or commerce"],
    "businesswoman": ["a woman regularly employed in business"],
    "chairman": ["the presiding officer of a meeting, committee, board, etc."],
    "chairperson": ["a person who presides over a meeting, committee, board, etc."],
    "chairwoman": ["a woman who presides over a meeting, committee, board, etc."],
    "child": [
        "a person between birth and puberty or full growth",
        "a son or daughter",
    ],
    "count": ["a nobleman of various European countries, equivalent in rank to an English earl"],
    "countess": [
        "the wife or widow of a count or earl",
        "a woman having the rank of a count or earl in her own right",
    ],
    "crew": [
        "a group of persons involved in a particular kind of work or working together",
        "the people who sail or operate a ship or boat",
    ],
    "czar": ["an emperor or king, especially the former emperor of Russia"],
    "czarina": ["the wife of a czar; empress of Russia"],
    "dad": ["father"],
    "daddy": ["father"],
    "daughter": ["a female child or person in relation to her parents"],
    "daughter-in-law": ["the wife of one's child"],
    "duchess": [
        "the wife or widow of a duke",
        "a woman who holds the rank of duke in her own right",
    ],
    "duke": ["(in Continental Europe) the male ruler of a duchy; the sovereign of a small state"],
    "earl": ["a British nobleman of a rank below that of marquis and above that of viscount"],
    "emperor": ["the male sovereign or supreme ruler of an empire"],
    "empress": ["a female ruler of an empire", "the consort of an emperor"],
    "father": ["a male parent"],
    "father-in-law": ["the father of one's husband or wife"],
    "female": ["a female human being; a woman or girl"],
    "fiance": ["a man engaged to be married; a man to whom a woman is engaged"],
    "fiancee": ["a woman engaged to be married; a woman to whom a man is engaged"],
    "fire fighter": ["a person who fights destructive fires; firefighter"],
    "fireman": ["a person employed to extinguish or prevent fires; firefighter"],
    "firewoman": ["a woman firefighter"],
    "friar": [
        "a member of a religious order, especially the mendicant orders of Franciscans, Dominicans, Carmelites, and Augustinians",
    ],
    "gentleman": ["a man of good family, breeding, or social position"],
    "girl": ["a female child, from birth to full growth"],
    "girlfriend": ["a frequent or favorite female companion; sweetheart"],
    "granddaughter": ["a daughter of one's son or daughter"],
    "grandchild": ["a child of one's son or daughter"],
    "grandfather": ["the father of one's father or mother"],
    "grandmother": ["the mother of one's father or mother"],
    "grandparent": ["a parent of a parent"],
    "grandson": ["a son of one's son or daughter"],
    "groom": ["a man newly married or about to be married; bridegroom"],
    "head teacher": ["a person in charge of a school; principal"],
    "headmaster": ["a man who is the head of a school, usually a private school"],
    "headmistress": ["a woman who is the head of a school, usually a private school"],
    "human": ["a human being; a person"],
    "husband": ["a married man, especially when considered in relation to his partner in marriage"],
    "king": ["a male sovereign or monarch who holds by life tenure the chief authority over a country and people"],
    "lad": ["a boy or youth"],
    "lady": ["a woman who is refined, polite, and well-spoken"],
    "landlady": [
        "a woman who owns or runs an inn, lodging house, or boarding house",
        "a woman who owns and leases property to others",
    ],
    "landlord": [
        "a person or organization that owns and leases apartments to others",
        "a person who owns or runs an inn, lodging house, etc.",
    ],
    "lass": ["a girl or young woman, especially one who is unmarried"],
    "madam": ["a polite term of address to a woman, originally used only to a woman of rank or authority"],
    "maidservant": ["a female servant; housemaid"],
    "male": ["a male human being; a man or boy"],
    "man": ["an adult male person"],
    "manservant": ["a male servant, especially a valet"],
    "milkmaid": ["a woman who milks cows or is employed in a dairy"],
    "milkman": ["a person who sells or delivers milk"],
    "mom": ["mother"],
    "mommy": ["mother"],
    "monk": [
        "a man who has withdrawn from the world for religious reasons, especially as a member of an order of cenobites living according to a particular rule and under vows of poverty, chastity, and obedience",
    ],
    "mother": ["a female parent"],
    "mother-in-law": ["the mother of one's husband or wife"],
    "mr.": ["mister: a title of respect prefixed to a man's surname or full name"],
    "mrs.": ["a title of respect prefixed to the name of a married woman"],
    "mum": ["mother", "a chrysanthemum"],
    "mummy": [
        "the dead body of a human being or animal preserved by the ancient Egyptian process or some similar method of embalming",
        "mother",
    ],
    "mx.": ["a title of respect prefixed to a person's surname that does not indicate gender"],
    "nephew": ["a son of one's brother or sister"],
    "niece": ["a daughter of one's brother or sister"],
    "nun": ["a woman member of a religious order, especially one bound by vows of poverty, chastity, and obedience"],
    "nuns": ["a woman member of a religious order, especially one bound by vows of poverty, chastity, and obedience"],
    "nymph": [
        "one of a numerous class of lesser deities of mythology, conceived of as beautiful maidens inhabiting the sea, rivers, woods, trees, mountains, meadows, etc., and frequently mentioned as attending a superior deity",
    ],
    "parent": ["a father or a mother"],
    "parent-in-law": ["the parent of one's spouse; one's father-in-law or mother-in-law"],
    "partner": ["a person who shares or is associated with another in some action or endeavor; sharer; associate"],
    "people": ["persons indefinitely or collectively; persons in general"],
    "person": ["a human being, whether an adult or child"],
    "police officer": ["a member of a police force or body"],
    "policeman": ["a member of a police force or body"],
    "policewoman": ["a woman who is a member of a police force"],
    "prince": ["a nonreigning male member of a royal family"],
    "princess": ["a nonreigning female member of a royal family"],
    "queen": ["a female sovereign or monarch", "the wife or consort of a king"],
    "renter": ["a person who rents property; tenant; lessee"],
    "ruler": [
        "a person who rules or governs; sovereign",
        "a strip of wood, metal, or other material having a straight edge and usually marked off in inches or centimeters, used for drawing lines, measuring, etc.",
    ],
    "salesman": ["a man who sells goods, services, etc."],
    "salesperson": ["a person who sells goods, services, etc."],
    "saleswoman": ["a woman who sells goods, services, etc."],
    "servant": ["a person employed by another, especially to perform domestic duties"],
    "server": ["a person who serves food or drink; waiter or waitress"],
    "sibling": ["a brother or sister"],
    "signor": ["a conventional Italian title of respect for a man, usually used separately"],
    "signora": ["a conventional Italian title of respect for a married woman, usually used separately"],
    "sir": ["a respectful or formal term of address used to a man"],
    "sister": ["a female offspring having both parents in common with another offspring; a female sibling"],
    "son": ["a male child or person in relation to his parents"],
    "son-in-law": ["the husband of one's child"],
    "soprano": ["the highest singing voice in women and boys"],
    "spinster": ["a woman still unmarried beyond the usual age of marrying"],
    "spirit": ["the principle of conscious life; the vital principle in humans, animating the body or mediating between body and soul"],
    "spouse": ["either member of a married pair in relation to the other; one's husband or wife"],
    "steward": [
        "a person who manages another's property or financial affairs; one who administers anything as the agent of another or others",
    ],
    "stewardess": ["a woman flight attendant"],
    "stepfather": ["the husband of one's mother by a later marriage"],
    "stepmother": ["the wife of one's father by a later marriage"],
    "stepparent": ["a person who is the new spouse of one's parent, after the marriage of one's biological or adoptive parents has ended"],
    "attendant": ["a person who attends another, as to perform a service"],
    "swain": ["a male admirer or lover"],
    "table": ["an article of furniture consisting of a flat, slablike top supported on one or more legs or other supports"],
    "uncle": ["a brother of one's father or mother"],
    "viscount": ["a nobleman next below an earl or count and next above a baron"],
    "viscountess": [
        "the wife or widow of a viscount",
        "a woman holding a rank equal to that of viscount",
    ],
    "waiter": ["a man who waits on tables, as in a restaurant"],
    "waitress": ["a woman who waits on tables, as in a restaurant"],
    "widow": ["a woman whose spouse has died and who has not remarried"],
    "widower": ["a man whose spouse has died and who has not remarried"],
    "wife": ["a married woman, especially when considered in relation to her partner in marriage"],
    "witch": ["a person, now especially a woman, who professes or is supposed to practice magic or sorcery; a sorceress"],
    "wizard": ["a person who practices magic; magician or sorcerer"],
    "woman": ["an adult female person"],
}


#: Regression and demo words captured alongside the gold list.
EXTRA_WORDS = ["crew", "soprano", "human", "table", "people", "nuns", "businessman", "businessperson"]


# WordNet has no "attendant" entry above; add one so the gold word resolves.
WORDNET["attendant"] = ["someone who waits on or tends to or attends to the needs of another"]
WORDNET["stepparent"] = ["the spouse of your parent by a subsequent marriage"]
del WORDNET["step-parent"]


# ---------------------------------------------------------------------------
# WNDB emission
# ---------------------------------------------------------------------------

_HEADER = [
    "  1 This miniature noun database follows the WNDB index/data file format.",
    "  2 It covers only the lemmas needed by the bundled evaluation data.",
]


def write_wndb(directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    lemmas = {word.replace(" ", "_"): glosses for word, glosses in sorted(WORDNET.items())}

    # One synset record per (lemma, sense). Record lengths are fixed once the
    # 8-digit offset fields are in place, so compute layout with placeholders
    # first, then write real byte offsets.
    records: list[tuple[str, str]] = []  # (lemma, gloss)
    for lemma, glosses in lemmas.items():
        for gloss in glosses:
            records.append((lemma, gloss))

    header_text = "\n".join(_HEADER) + "\n"

    def record_line(offset: int, anchor: int, lemma: str, gloss: str) -> str:
        return f"{offset:08d} 18 n 01 {lemma} 0 001 @ {anchor:08d} n 0000 | {gloss}\n"

    # First pass with dummy offsets to learn each record's byte length.
    offsets: list[int] = []
    position = len(header_text.encode("utf-8"))
    for lemma, gloss in records:
        offsets.append(position)
        position += len(record_line(0, 0, lemma, gloss).encode("utf-8"))

    anchor = offsets[0]
    data_lines = [
        record_line(offset, anchor, lemma, gloss)
        for offset, (lemma, gloss) in zip(offsets, records)
    ]
    (directory / "data.noun").write_text(header_text + "".join(data_lines), encoding="utf-8")

    offset_by_record = {}
    for offset, (lemma, gloss) in zip(offsets, records):
        offset_by_record.setdefault(lemma, []).append(offset)

    index_lines = []
    for lemma in sorted(lemmas):
        sense_offsets = offset_by_record[lemma]
        n = len(sense_offsets)
        joined = " ".join(f"{off:08d}" for off in sense_offsets)
        index_lines.append(f"{lemma} n {n} 1 @ {n} 0 {joined}  \n")
    (directory / "index.noun").write_text(header_text + "".join(index_lines), encoding="utf-8")


# ---------------------------------------------------------------------------
# Snapshots
# ---------------------------------------------------------------------------


class _TableProvider:
    """In-memory provider over one of the definition tables above."""

    deterministic = True

    def __init__(self, provider_id: str, table: dict[str, list[str]]):
        self.provider_id = provider_id
        self.table = table

    def lookup(self, word: str):
        from lexgender.providers.base import DefinitionSet

        if word not in self.table:
            return None
        return DefinitionSet(word=word, provider_id=self.provider_id, definitions=tuple(self.table[word]))


def capture_words() -> list[str]:
    words = [word for word, _, _ in gold_entries()]
    words.extend(EXTRA_WORDS)
    seen = set()
    ordered = []
    for word in words:
        if word not in seen:
            seen.add(word)
            ordered.append(word)
    return sorted(ordered)


def write_snapshots() -> None:
    out = DATA / "snapshots"
    out.mkdir(parents=True, exist_ok=True)
    words = capture_words()

    wordnet = WordNetProvider(DATA / "wndb")
    snapshot_write(wordnet, words, out / "wordnet.json")
    snapshot_write(_TableProvider("merriam_webster", MERRIAM_WEBSTER), words, out / "merriam_webster.json")
    snapshot_write(_TableProvider("dictionary_com", DICTIONARY_COM), words, out / "dictionary_com.json")


# ---------------------------------------------------------------------------
# Toy tagged corpus: 50 sentences, token<TAB>POS, blank line between
# sentences. Nouns and their frequencies are fixed by the sentence list.
# ---------------------------------------------------------------------------

TOY_SENTENCES = [
    [("the", "DT"), ("nun", "NN"), ("saw", "VBD"), ("the", "DT"), ("monk", "NN"), (".", ".")],
    [("a", "DT"), ("king", "NN"), ("met", "VBD"), ("the", "DT"), ("queen", "NN"), (".", ".")],
    [("the", "DT"), ("crew", "NN"), ("sailed", "VBD"), ("north", "RB"), (".", ".")],
    [("one", "CD"), ("widow", "NN"), ("spoke", "VBD"), ("quietly", "RB"), (".", ".")],
    [("the", "DT"), ("businessman", "NN"), ("signed", "VBD"), ("papers", "VBZ"), (".", ".")],
    [("a", "DT"), ("policewoman", "NN"), ("waved", "VBD"), (".", ".")],
    [("the", "DT"), ("soprano", "NN"), ("sang", "VBD"), (".", ".")],
    [("this", "DT"), ("man", "NN"), ("laughed", "VBD"), (".", ".")],
    [("those", "DT"), ("women", "NNS"), ("argued", "VBD"), (".", ".")],
    [("their", "PRP$"), ("sons", "NNS"), ("slept", "VBD"), (".", ".")],
    [("the", "DT"), ("table", "NN"), ("wobbled", "VBD"), (".", ".")],
    [("two", "CD"), ("tables", "NNS"), ("fell", "VBD"), (".", ".")],
    [("a", "DT"), ("person", "NN"), ("arrived", "VBD"), (".", ".")],
    [("the", "DT"), ("people", "NNS"), ("cheered", "VBD"), (".", ".")],
    [("every", "DT"), ("human", "NN"), ("dreams", "VBZ"), (".", ".")],
    [("the", "DT"), ("nuns", "NNS"), ("prayed", "VBD"), (".", ".")],
    [("my", "PRP$"), ("grand-father", "NN"), ("smiled", "VBD"), (".", ".")],
    [("the", "DT"), ("zorblex", "NN"), ("hummed", "VBD"), (".", ".")],
    [("the", "DT"), ("f@@", "NN"), ("glitched", "VBD"), (".", ".")],
    [("the", "DT"), ("nun", "NN"), ("read", "VBD"), (".", ".")],
]


def toy_corpus_sentences() -> list[list[tuple[str, str]]]:
    sentences = list(TOY_SENTENCES)
    # Pad to 50 sentences with recurring noun mentions so frequencies vary.
    fillers = [
        [("the", "DT"), ("king", "NN"), ("waited", "VBD"), (".", ".")],
        [("a", "DT"), ("queen", "NN"), ("ruled", "VBD"), (".", ".")],
        [("the", "DT"), ("crew", "NN"), ("rested", "VBD"), (".", ".")],
        [("the", "DT"), ("table", "NN"), ("stood", "VBD"), (".", ".")],
        [("some", "DT"), ("people", "NNS"), ("left", "VBD"), (".", ".")],
        [("the", "DT"), ("monk", "NN"), ("wrote", "VBD"), (".", ".")],
    ]
    i = 0
    while len(sentences) < 50:
        sentences.append(fillers[i % len(fillers)])
        i += 1
    return sentences


def write_toy_corpus(path: Path) -> None:
    lines = []
    for sentence in toy_corpus_sentences():
        for token, pos in sentence:
            lines.append(f"{token}\t{pos}")
        lines.append("")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# Grid-search fixture: 20 synthetic words over two snapshot providers, with
# seed tokens planted at varying definition/token depths so that accuracy
# genuinely varies across (d, t, w) cells.
# ---------------------------------------------------------------------------

FILLER = (
    "quiet stone river meadow lantern harbor autumn thread marble copper "
    "willow ember saddle parchment orchard anchor violet timber hollow frost"
).split()


def build_grid_fixture() -> None:
    TESTS_DATA.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20721)
    lexicon = default_lexicon()
    labels = ["masc", "fem", "neut"]

    words = [f"gridword{i:02d}" for i in range(20)]
    gold_lines = ["# synthetic fixture for grid-search soundness checks"]
    snapshots = {"grid_alpha": {}, "grid_beta": {}}
    for word in words:
        gold_lines.append(f"{word}\tmisc_placeholder\tmisc")

    for i, word in enumerate(words):
        gold_label = labels[i % 3]
        gold_lines[i + 1] = f"{word}\t{gold_label}\tmisc"
        for provider_id in snapshots:
            if rng.random() < 0.1:
                snapshots[provider_id][word] = {"found": False, "definitions": []}
                continue
            definitions = []
            for _ in range(rng.randint(1, 10)):
                tokens = [rng.choice(FILLER) for _ in range(rng.randint(4, 40))]
                for _ in range(rng.randint(0, 3)):
                    pair = rng.choice(lexicon.pairs)
                    form = rng.choice(
                        [pair.feminine, pair.masculine,
                         lexicon.plurals[pair.feminine], lexicon.plurals[pair.masculine]]
                    )
                    tokens.insert(rng.randrange(len(tokens) + 1), form)
                definitions.append(" ".join(tokens))
            snapshots[provider_id][word] = {"found": True, "definitions": definitions}

    (TESTS_DATA / "grid20_gold.tsv").write_text("\n".join(gold_lines) + "\n", encoding="utf-8")
    for provider_id, entries in snapshots.items():
        payload = {
            "provider": provider_id,
            "captured_at": "2024-01-01T00:00:00+00:00",
            "entries": entries,
        }
        path = TESTS_DATA / f"grid20_{provider_id.split('_')[1]}.json"
        path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------


def write_gold(path: Path) -> None:
    lines = [
        "# Gold-standard nouns with near-unambiguous lexical gender.",
        "# word<TAB>label<TAB>category; one row per pairing.",
    ]
    for word, label, category in gold_entries():
        lines.append(f"{word}\t{label}\t{category}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    write_gold(DATA / "gold.tsv")
    write_wndb(DATA / "wndb")
    write_snapshots()
    write_toy_corpus(DATA / "toy_tagged.tsv")
    build_grid_fixture()

    entries = gold_entries()
    by_label = {}
    for _, label, _ in entries:
        by_label[label] = by_label.get(label, 0) + 1
    print(f"gold: {len(entries)} entries {by_label}")
    print(f"wndb lemmas: {len(WORDNET)}")
    print(f"snapshot words: {len(capture_words())}")


if __name__ == "__main__":
    main()
