from fractions import Fraction
from pathlib import Path

import pytest

from app.modules.classify import GaugeField, dch, kostant_sequence_check
from app.modules.complex import standard_space
from app.modules.exceptions import MonopoleError
from app.modules.logging import (
    JsonLogRecord,
    JsonLogReader,
    configure_logging,
    get_app_logger,
    get_json_app_logger,
)
from app.modules.nerve import build_nerve, trivial_action


def _records(log_dir: Path, logger_name: str) -> list[JsonLogRecord]:
    reader = JsonLogReader.latest(log_dir, logger_name)
    assert reader is not None, "Файл JSON-логов не найден"
    return reader.to_records()


def test_monopole_is_logged_with_details(tmp_path: Path) -> None:
    """При монополе в JSON попадают поля исключения и заряд."""
    configure_logging(level="DEBUG", log_dir=tmp_path)
    field = GaugeField.from_mapping(
        standard_space("tetrahedron"), {"01": Fraction(1, 4), "12": Fraction(3, 4), "13": Fraction(1, 4)}
    )
    with pytest.raises(MonopoleError):
        dch(field)

    reader = JsonLogReader.latest(tmp_path, "app.modules.classify.chern")
    assert reader is not None
    assert reader.failures() == reader.for_operation("dch")[-1:]
    last = reader.failures()[-1]
    assert last.failed
    assert last.level == "ERROR"
    assert last.operation == "dch"
    assert last.details == {"simplex": "0123", "charge": "1"}
    assert last.exc_type == "MonopoleError"
    assert "0123" in (last.exc_message or "")
    assert last.exc_traceback is not None


def test_certificate_report_is_logged(tmp_path: Path) -> None:
    configure_logging(level="INFO", log_dir=tmp_path)
    kostant_sequence_check(build_nerve(trivial_action(standard_space("point"), 2), 3), samples=2)

    reader = JsonLogReader.latest(tmp_path, "app.modules.classify.kostant")
    assert reader is not None
    summary = reader.for_operation("kostant_sequence_check")
    assert summary, "Нет записи об итогах проверки"
    assert summary[-1].level == "INFO"
    assert summary[-1].details is not None
    assert summary[-1].details["kernel"] == "Z/2"


def test_debug_records_follow_configured_level(tmp_path: Path) -> None:
    """После `configure_logging` уровень меняется у уже созданных логгеров."""
    logger = get_json_app_logger("app.tests.levels")
    configure_logging(level="WARN", log_dir=tmp_path)
    logger.info("Не должно попасть в файл")
    logger.warning("Предупреждение", extra={"operation": "level_check", "details": {"n": 1}})

    records = _records(tmp_path, "app.tests.levels")
    assert [r.message for r in records] == ["Предупреждение"]
    assert records[0].details == {"n": 1}


def test_text_logger_writes_daily_file(tmp_path: Path) -> None:
    configure_logging(level="INFO", log_dir=tmp_path)
    logger = get_app_logger("app.tests.text")
    assert get_app_logger("app.tests.text") is logger
    logger.info("Команда: diffchar cohomology")

    files = sorted((tmp_path / "app.tests.text").glob("*_logs.log"))
    assert files, "Файл текстовых логов не найден"
    assert "diffchar cohomology" in files[-1].read_text(encoding="utf-8")


def test_reader_skips_blank_lines(tmp_path: Path) -> None:
    log_file = tmp_path / "01_01_26_logs.ndjson"
    log_file.write_text(
        '{"time": "t", "logger": "x", "level": "INFO", "file": "f", "thread": "main", "message": "m"}\n\n',
        encoding="utf-8",
    )
    records = JsonLogReader(log_file).to_records()
    assert len(records) == 1
    assert records[0].operation is None
    assert not records[0].failed
