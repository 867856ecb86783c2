"""Exception types shared across the engine."""


class OntoclirError(Exception):
    """Base class for all engine errors."""


# --- ontology ---------------------------------------------------------------

class OntologyError(OntoclirError):
    pass


class CycleDetected(OntologyError):
    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(f"cycle detected through node {node_id!r}")


class MissingLanguageEntry(OntologyError):
    def __init__(self, node_id: str, language: str):
        self.node_id = node_id
        self.language = language
        super().__init__(f"node {node_id!r} has no entry for language {language!r}")


class DuplicateNodeId(OntologyError):
    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(f"duplicate node id {node_id!r}")


class DanglingParentReference(OntologyError):
    def __init__(self, node_id: str, parent_id: str):
        self.node_id = node_id
        self.parent_id = parent_id
        super().__init__(f"node {node_id!r} references unknown parent {parent_id!r}")


class EmptySurfaceForm(OntologyError):
    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(f"node {node_id!r} has an empty surface form")


class UnknownNode(OntologyError):
    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(f"unknown node {node_id!r}")


# --- text processing --------------------------------------------------------

class EmptyQuery(OntoclirError):
    def __init__(self):
        super().__init__("query is empty")


class NoKeywords(OntoclirError):
    def __init__(self, query: str = ""):
        self.query = query
        super().__init__(f"no noun/verb keywords found in query {query!r}")


# --- corpus -----------------------------------------------------------------

class CorpusError(OntoclirError):
    pass


class InvalidUtf8(CorpusError):
    def __init__(self, path: str):
        self.path = path
        super().__init__(f"file is not valid UTF-8: {path}")


class DuplicateId(CorpusError):
    def __init__(self, doc_id: str):
        self.doc_id = doc_id
        super().__init__(f"duplicate document id {doc_id!r}")


class EmptyFile(CorpusError):
    def __init__(self, path: str):
        self.path = path
        super().__init__(f"file is empty: {path}")


class FormatError(CorpusError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


# --- retrieval --------------------------------------------------------------

class EmptyPattern(OntoclirError):
    def __init__(self):
        super().__init__("search pattern is empty")


class NoDocumentsInLanguage(OntoclirError):
    def __init__(self, language: str):
        self.language = language
        super().__init__(f"no documents available in language {language!r}")


class EmptyGraph(OntoclirError):
    def __init__(self):
        super().__init__("document graph has no nodes")


# --- extraction -------------------------------------------------------------

class NoPassages(OntoclirError):
    def __init__(self):
        super().__init__("no matching passages found")


# --- evaluation -------------------------------------------------------------

class EmptyRelevantSet(OntoclirError):
    def __init__(self, query_id: str = ""):
        self.query_id = query_id
        super().__init__(f"relevant set is empty for query {query_id!r}")


class UnknownQueryId(OntoclirError):
    def __init__(self, query_id: str):
        self.query_id = query_id
        super().__init__(f"query id {query_id!r} has no relevance judgments")


class UnknownLanguage(OntoclirError):
    def __init__(self, code: str):
        self.code = code
        super().__init__(f"language code {code!r} is not registered")
