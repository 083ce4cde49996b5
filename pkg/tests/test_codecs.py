import pytest
from hypothesis import given, settings

from conftest import DATA, GOLDEN, readings
from sswbench.encoding import detect_encoding, encode, extract
from sswbench.es3n import encode_es3n, extract_es3n
from sswbench.observation import (
    AIR_TEMPERATURE,
    CELSIUS,
    REFERENCE_TIMESTAMP,
    DataRecord,
    QuantityObservation,
    SensorReading,
    TimeInstant,
    reference_reading,
)
from sswbench.payload import (
    W3C_SPELLING,
    DanglingAnnotationError,
    DanglingReferenceError,
    EncodedPayload,
    EncodeOptions,
    EncodingId,
    measure,
)
from sswbench.ssw import encode_ssw, extract_ssw
from sswbench.triples import RDF, TIME, XSD, IriRef, PlainLiteral, Triple, project, to_ntriples
from sswbench.xmltree import XmlSyntaxError, parse

TS_ON = EncodeOptions(include_timestamp=True)


def shape(el):
    """Order-insensitive structure: tag, attributes, text, children."""
    return (el.tag, tuple(sorted(el.attrs.items())), el.text.strip() if not el.children else "",
            tuple(sorted(shape(c) for c in el.children)))


def with_fields(k, name_len=5):
    fields = tuple(
        QuantityObservation(f"F{i:0{name_len - 1}d}", AIR_TEMPERATURE, CELSIUS, 1.5) for i in range(k)
    )
    return SensorReading(1, TimeInstant(REFERENCE_TIMESTAMP), DataRecord(reference_reading().record.definition, fields))


def one_field():
    r = reference_reading()
    return SensorReading(1, r.time, DataRecord(r.record.definition, r.record.fields[:1]))


class TestSswEncode:
    def test_golden(self):
        assert encode_ssw(reference_reading()).bytes == (GOLDEN / "ssw_atmos.xml").read_bytes()

    def test_structure_matches_listing(self):
        assert shape(parse(encode_ssw(reference_reading()).bytes)) == shape(parse((DATA / "listing_ssw.xml").read_bytes()))

    def test_one_field(self):
        p = encode_ssw(one_field())
        root = parse(p.bytes)
        assert [c.tag for c in root.children] == ["swe:field"]
        assert p.bytes == (GOLDEN / "ssw_one_field.xml").read_bytes()

    def test_timestamp_component(self):
        root = parse(encode_ssw(reference_reading(sensor_id=7), TS_ON).bytes)
        comp = root.children[-1]
        assert comp.tag == "swe:component"
        assert comp.attrs == {"rdfa:about": "time_7", "rdfa:instanceof": "time:Instant"}
        assert comp.children[0].text == REFERENCE_TIMESTAMP

    def test_canonical_whitespace(self):
        text = encode_ssw(reference_reading()).text()
        assert "'" not in text and text.endswith(">\n") and "\n\n" not in text
        for line in text.splitlines():
            indent = len(line) - len(line.lstrip(" "))
            assert indent % 2 == 0 and line.lstrip(" ").startswith("<")
            assert " = " not in line and "= " not in line

    def test_size(self):
        p = encode_ssw(reference_reading())
        assert measure(p) == p.size_bytes == len(p.bytes) == 968

    def test_w3c_spelling_same_semantics(self):
        opts = EncodeOptions(rdfa=W3C_SPELLING)
        p = encode_ssw(reference_reading(), opts)
        assert b"rdfa:" not in p.bytes and b' typeof="swe-om:Quantity"' in p.bytes
        assert extract_ssw(p) == extract_ssw(encode_ssw(reference_reading()))


class TestSswExtract:
    def test_timestamp_fragment_two_triples(self):
        ts = extract((GOLDEN / "ssw_timestamp.xml").read_bytes())[1]
        subject = IriRef("http://example.org/wsn/time_1")
        assert set(ts) == {
            Triple(subject, IriRef(RDF + "type"), IriRef(TIME + "Instant")),
            Triple(subject, IriRef(XSD + "date-time"), PlainLiteral("2010-03-08T05:00:00")),
        }

    def test_reference_projection(self):
        ts = extract_ssw(encode_ssw(reference_reading()))
        assert {(q.name, q.value) for q in project(ts)} == {("AirTemperature", "35.1"), ("WinSpeed", "6.5")}

    def test_no_annotations(self):
        payload = EncodedPayload(b'<swe:DataRecord definition="urn:x"><swe:field name="a"/></swe:DataRecord>',
                                 EncodingId.SSW)
        assert len(extract_ssw(payload)) == 0

    def test_malformed_xml_position(self):
        bad = EncodedPayload(b"<swe:DataRecord>\n  <swe:field>\n</swe:DataRecord>\n", EncodingId.SSW)
        with pytest.raises(XmlSyntaxError) as info:
            extract_ssw(bad)
        assert (info.value.line, info.value.column) == (3, 2)
        assert "line 3, column 2" in str(info.value)

    def test_dangling_annotation(self):
        bad = EncodedPayload(b'<swe:Time rdfa:property="xs:date-time">2010-03-08T05:00:00</swe:Time>',
                             EncodingId.SSW)
        with pytest.raises(DanglingAnnotationError, match="no subject"):
            extract_ssw(bad)

    def test_wrong_encoding(self):
        with pytest.raises(ValueError):
            extract_ssw(encode_es3n(reference_reading()))


class TestEs3nEncode:
    def test_golden(self):
        assert encode_es3n(reference_reading()).bytes == (GOLDEN / "es3n_atmos.xml").read_bytes()

    def test_structure_matches_listing(self):
        assert shape(parse(encode_es3n(reference_reading()).bytes)) == shape(parse((DATA / "listing_es3n.xml").read_bytes()))

    def test_individual_names(self):
        root = parse(encode_es3n(reference_reading()).bytes)
        assert [c.attrs["rdf:ID"] for c in root.children] == [
            "Quantity_AirTemperature", "Quantity_WinSpeed", "DataRecord_AtmosphericConditions"]

    def test_one_field(self):
        root = parse(encode_es3n(one_field()).bytes)
        assert [c.tag for c in root.children] == ["swe-om:Quantity", "swe-om:DataRecord"]
        assert [c.tag for c in root.children[1].children].count("swe-om:hasField") == 1

    def test_exceeds_ssw(self):
        ssw = (GOLDEN / "ssw_atmos.xml").read_bytes()
        es3n = (GOLDEN / "es3n_atmos.xml").read_bytes()
        assert len(es3n) == 1338 > len(ssw) == 968

    def test_header_widens_gap(self):
        plain = encode_es3n(reference_reading())
        headed = encode_es3n(reference_reading(), EncodeOptions(es3n_header=True))
        assert headed.size_bytes > plain.size_bytes
        assert project(extract_es3n(headed)) == project(extract_es3n(plain))

    def test_timestamp_individual(self):
        ts = extract_es3n(encode_es3n(reference_reading(sensor_id=1), TS_ON))
        subject = IriRef("http://example.org/wsn/reading#time_1")
        assert Triple(subject, IriRef(RDF + "type"), IriRef(TIME + "Instant")) in ts
        assert Triple(subject, IriRef(XSD + "date-time"), PlainLiteral(REFERENCE_TIMESTAMP)) in ts


class TestEs3nExtract:
    def test_golden_ntriples(self):
        ts = extract_es3n(encode_es3n(reference_reading()))
        assert to_ntriples(ts) == (GOLDEN / "es3n_atmos.nt").read_text()

    def test_no_ids(self):
        payload = EncodedPayload(b"<rdf:RDF><swe-om:Quantity/></rdf:RDF>", EncodingId.ES3N)
        assert len(extract_es3n(payload)) == 0

    def test_misspelt_reference_is_dangling(self):
        text = (DATA / "listing_es3n.xml").read_text().replace(
            'rdf:resource="#Quantity_WinSpeed"', 'rdf:resource="Quantity_WindSpeed"')
        with pytest.raises(DanglingReferenceError, match="Quantity_WindSpeed"):
            extract_es3n(EncodedPayload(text.encode(), EncodingId.ES3N))

    def test_empty_document(self):
        with pytest.raises(XmlSyntaxError, match="no element found"):
            extract_es3n(EncodedPayload(b"", EncodingId.ES3N))

    def test_multiple_roots_rejected(self):
        with pytest.raises(XmlSyntaxError):
            parse(b"<a/><b/>")


class TestProperties:
    @given(readings())
    @settings(max_examples=100)
    def test_round_trip_and_cross_codec(self, r):
        for opts in (EncodeOptions(), TS_ON):
            a, b = encode_ssw(r, opts), encode_es3n(r, opts)
            assert project(extract_ssw(a)) == project(extract_es3n(b))
            assert a.bytes == encode_ssw(r, opts).bytes

    @given(readings())
    @settings(max_examples=100)
    def test_size_dominance(self, r):
        for opts in (EncodeOptions(), TS_ON):
            assert measure(encode_es3n(r, opts)) > measure(encode_ssw(r, opts))

    @given(readings(max_fields=9))
    @settings(max_examples=50)
    def test_adding_field_grows_both(self, r):
        extra = QuantityObservation("zz_extra_field_name_unused", AIR_TEMPERATURE, CELSIUS, 1.0)
        names = {q.name for q in r.record.fields}
        if extra.name in names:
            return
        bigger = SensorReading(r.sensor_id, r.time, DataRecord(r.record.definition, r.record.fields + (extra,)))
        for enc in EncodingId:
            assert measure(encode(bigger, enc)) > measure(encode(r, enc))

    @pytest.mark.parametrize("enc", list(EncodingId))
    def test_per_field_increment_is_linear(self, enc):
        # increment measured from the two golden documents of equal-length fields
        sizes = [measure(encode(with_fields(k), enc)) for k in range(1, 7)]
        inc = sizes[1] - sizes[0]
        assert all(b - a == inc for a, b in zip(sizes, sizes[1:]))
        assert inc > 0

    def test_golden_field_increments(self):
        ssw_inc = len((GOLDEN / "ssw_atmos.xml").read_bytes()) - len((GOLDEN / "ssw_one_field.xml").read_bytes())
        es3n_inc = len((GOLDEN / "es3n_atmos.xml").read_bytes()) - len((GOLDEN / "es3n_one_field.xml").read_bytes())
        assert (ssw_inc, es3n_inc) == (431, 534)
        assert measure(encode_ssw(one_field())) == 537
        assert measure(encode_es3n(one_field())) == 804


def test_detect_encoding():
    assert detect_encoding((GOLDEN / "ssw_atmos.xml").read_bytes()) is EncodingId.SSW
    assert detect_encoding((GOLDEN / "es3n_atmos.xml").read_bytes()) is EncodingId.ES3N


@pytest.mark.parametrize("name", ["ssw_timestamp", "ssw_atmos", "es3n_atmos", "ssw_one_field", "es3n_one_field"])
def test_golden_ntriples_files(name):
    assert to_ntriples(extract((GOLDEN / f"{name}.xml").read_bytes())[1]) == (GOLDEN / f"{name}.nt").read_text()
