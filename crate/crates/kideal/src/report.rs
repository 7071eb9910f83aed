//! Check records and deterministic report rendering.
//!
//! A report is a list of free-form detail lines followed by check records
//! sorted by id and payload, closed by a `TOTAL` summary.  Two runs over
//! the same input produce byte-identical output.

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    /// An observation that is recorded, not asserted.
    Witness,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Witness => "WITNESS",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    pub payload: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Tsv,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    details: Vec<String>,
    records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push_detail(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    pub fn push_record(&mut self, id: impl Into<String>, status: Status, payload: impl Into<String>) {
        self.records.push(CheckRecord {
            id: id.into(),
            status,
            payload: payload.into(),
        });
    }

    /// PASS with no payload, or FAIL carrying the witness.
    pub fn assert_check(&mut self, id: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.push_record(id, Status::Pass, ""),
            Some(w) => self.push_record(id, Status::Fail, w),
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.details.extend(other.details);
        self.records.extend(other.records);
    }

    pub fn details(&self) -> &[String] {
        &self.details
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn has_failures(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut witness = 0;
        for r in &self.records {
            match r.status {
                Status::Pass => pass += 1,
                Status::Fail => fail += 1,
                Status::Witness => witness += 1,
            }
        }
        (pass, fail, witness)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let mut sorted: Vec<&CheckRecord> = self.records.iter().collect();
        sorted.sort_by(|a, b| {
            (&a.id, &a.payload, a.status).cmp(&(&b.id, &b.payload, b.status))
        });
        let (pass, fail, witness) = self.counts();
        let mut out = String::new();
        for d in &self.details {
            match format {
                OutputFormat::Text => out.push_str(d),
                OutputFormat::Tsv => {
                    out.push_str("DETAIL\t");
                    out.push_str(d);
                }
            }
            out.push('\n');
        }
        for r in sorted {
            match format {
                OutputFormat::Text => {
                    out.push_str(&r.id);
                    out.push(' ');
                    out.push_str(r.status.as_str());
                    if !r.payload.is_empty() {
                        out.push(' ');
                        out.push_str(&r.payload);
                    }
                }
                OutputFormat::Tsv => {
                    out.push_str(&r.id);
                    out.push('\t');
                    out.push_str(r.status.as_str());
                    out.push('\t');
                    out.push_str(&r.payload);
                }
            }
            out.push('\n');
        }
        match format {
            OutputFormat::Text => {
                out.push_str(&format!(
                    "TOTAL {} PASS {pass} FAIL {fail} WITNESS {witness}\n",
                    self.records.len()
                ));
            }
            OutputFormat::Tsv => {
                out.push_str(&format!(
                    "TOTAL\t{}\tPASS\t{pass}\tFAIL\t{fail}\tWITNESS\t{witness}\n",
                    self.records.len()
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_has_only_the_summary() {
        let report = Report::new();
        assert_eq!(report.render(OutputFormat::Text), "TOTAL 0 PASS 0 FAIL 0 WITNESS 0\n");
    }

    #[test]
    fn single_pass_record() {
        let mut report = Report::new();
        report.push_record("CLOSURE-ZERO", Status::Pass, "");
        assert_eq!(
            report.render(OutputFormat::Text),
            "CLOSURE-ZERO PASS\nTOTAL 1 PASS 1 FAIL 0 WITNESS 0\n"
        );
        assert!(!report.has_failures());
    }

    #[test]
    fn records_sort_by_id_then_payload() {
        let mut a = Report::new();
        a.push_record("B-CHECK", Status::Fail, "x=1");
        a.push_record("A-CHECK", Status::Pass, "");
        a.push_record("B-CHECK", Status::Pass, "a=0");
        let mut b = Report::new();
        b.push_record("B-CHECK", Status::Pass, "a=0");
        b.push_record("B-CHECK", Status::Fail, "x=1");
        b.push_record("A-CHECK", Status::Pass, "");
        assert_eq!(b.render(OutputFormat::Text), a.render(OutputFormat::Text));
        let text = a.render(OutputFormat::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines,
            vec![
                "A-CHECK PASS",
                "B-CHECK PASS a=0",
                "B-CHECK FAIL x=1",
                "TOTAL 3 PASS 2 FAIL 1 WITNESS 0",
            ]
        );
        assert!(a.has_failures());
    }

    #[test]
    fn tsv_uses_tabs_everywhere() {
        let mut report = Report::new();
        report.push_detail("CEP id ITEM 1 EQUAL");
        report.push_record("CEP-KERNEL", Status::Witness, "absent");
        assert_eq!(
            report.render(OutputFormat::Tsv),
            "DETAIL\tCEP id ITEM 1 EQUAL\nCEP-KERNEL\tWITNESS\tabsent\nTOTAL\t1\tPASS\t0\tFAIL\t0\tWITNESS\t1\n"
        );
    }
}
