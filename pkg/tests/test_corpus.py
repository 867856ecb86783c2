import pytest

from ontoclir import corpus, errors
from ontoclir.pipeline import bundled_path


def test_bundled_corpus_counts(index):
    files_en = len(list(bundled_path("corpus/en").glob("*.txt")))
    files_ta = len(list(bundled_path("corpus/ta").glob("*.txt")))
    assert len(index) == files_en + files_ta == 24
    assert len(index.by_language["en"]) == files_en == 12
    assert len(index.by_language["ta"]) == files_ta == 12


def test_by_language_partitions_documents(index):
    all_ids = set()
    for lang, ids in index.by_language.items():
        assert ids == sorted(ids)
        assert not (set(ids) & all_ids)
        all_ids.update(ids)
        assert all(index.documents[i].language == lang for i in ids)
    assert all_ids == set(index.documents)


def test_empty_directory(tmp_path):
    assert len(corpus.ingest(tmp_path)) == 0


def test_ingest_idempotent():
    a = corpus.ingest(bundled_path("corpus"))
    b = corpus.ingest(bundled_path("corpus"))
    assert a.documents == b.documents
    assert a.by_language == b.by_language


def test_empty_file_rejected(tmp_path):
    (tmp_path / "en").mkdir()
    (tmp_path / "en" / "blank.txt").write_text("   \n", encoding="utf-8")
    with pytest.raises(errors.EmptyFile):
        corpus.ingest(tmp_path)


def test_invalid_utf8_rejected(tmp_path):
    (tmp_path / "en").mkdir()
    (tmp_path / "en" / "bad.txt").write_bytes(b"\xff\xfe broken")
    with pytest.raises(errors.InvalidUtf8) as exc:
        corpus.ingest(tmp_path)
    assert "bad.txt" in exc.value.path


def test_duplicate_id():
    idx = corpus.CorpusIndex()
    doc = corpus.Document(id="x", language="en", title="t", body="b", source="s")
    idx.add(doc)
    with pytest.raises(errors.DuplicateId):
        idx.add(doc)


def test_language_fallback_by_script(tmp_path):
    (tmp_path / "misc").mkdir()
    (tmp_path / "misc" / "doc.txt").write_text("பொங்கல் விழா", encoding="utf-8")
    idx = corpus.ingest(tmp_path)
    assert idx.documents["misc/doc"].language == "ta"


def test_round_trip(index):
    reloaded = corpus.load_index(corpus.save_index(index))
    assert reloaded.documents == index.documents
    assert reloaded.by_language == index.by_language


def test_empty_index_round_trip():
    empty = corpus.CorpusIndex()
    assert corpus.load_index(corpus.save_index(empty)).documents == {}


def test_truncated_file_rejected(index):
    content = corpus.save_index(index)
    truncated = content[: content.rindex("{") + 10]
    with pytest.raises(errors.FormatError) as exc:
        corpus.load_index(truncated)
    assert exc.value.line is not None


def test_wrong_header_rejected():
    with pytest.raises(errors.FormatError):
        corpus.load_index('{"format":"something-else","version":1}\n')
